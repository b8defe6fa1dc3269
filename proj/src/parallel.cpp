#include "salem/parallel.hpp"

#include <atomic>
#include <thread>

namespace salem::par {

namespace {
std::atomic<int> g_threads{0};  // 0 = use hardware concurrency
}

int thread_count() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { g_threads.store(n); }

void run_chunks(std::int64_t n, std::int64_t chunk,
                const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  if (chunk <= 0) chunk = 1;
  std::size_t n_chunks = static_cast<std::size_t>((n + chunk - 1) / chunk);
  int workers = thread_count();
  if (workers <= 1 || n_chunks <= 1) {
    for (std::size_t ci = 0; ci < n_chunks; ++ci) {
      std::int64_t lo = static_cast<std::int64_t>(ci) * chunk;
      std::int64_t hi = std::min(n, lo + chunk);
      fn(ci, lo, hi);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t ci = next.fetch_add(1);
      if (ci >= n_chunks) return;
      std::int64_t lo = static_cast<std::int64_t>(ci) * chunk;
      std::int64_t hi = std::min(n, lo + chunk);
      fn(ci, lo, hi);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(workers, static_cast<int>(n_chunks));
  pool.reserve(spawn - 1);
  for (int i = 1; i < spawn; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace salem::par
