#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace salem::par {

int thread_count();
void set_thread_count(int n);

// Runs fn(chunk_index, lo, hi) over [0,n) split into fixed-size chunks.
// Chunk boundaries depend only on n and chunk, never on the thread count,
// so per-chunk results can be combined in index order deterministically.
void run_chunks(std::int64_t n, std::int64_t chunk,
                const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn);

template <class T, class Map, class Combine>
T map_reduce(std::int64_t n, std::int64_t chunk, T init, Map map, Combine combine) {
  if (n <= 0) return init;
  std::size_t n_chunks = static_cast<std::size_t>((n + chunk - 1) / chunk);
  std::vector<T> partial(n_chunks, init);
  run_chunks(n, chunk, [&](std::size_t ci, std::int64_t lo, std::int64_t hi) {
    partial[ci] = map(lo, hi);
  });
  T acc = init;
  for (const T& p : partial) acc = combine(acc, p);
  return acc;
}

}  // namespace salem::par
