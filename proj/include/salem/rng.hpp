#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "salem/error.hpp"

namespace salem {

// Counter-based generator (SplitMix64). Substreams are derived by hashing a
// key tuple, so draws for distinct (level, attempt, slot) tuples are
// independent and reproducible regardless of evaluation order.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased bounded draw (rejection sampling).
  std::uint64_t next_below(std::uint64_t n) {
    require(n > 0, Err::InvalidArgument, "next_below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  double next_unit() {  // uniform in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  static std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    Rng r(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    return r.next_u64();
  }

  static Rng substream(std::uint64_t seed, std::uint64_t level, std::uint64_t attempt,
                       std::uint64_t slot) {
    return Rng(mix(mix(mix(seed, level), attempt), slot));
  }

private:
  std::uint64_t state_;
};

// Uniformly random size-t subset of {0,...,n-1}, returned sorted.
// Partial Fisher-Yates, so every subset has probability 1/C(n,t).
inline std::vector<int> random_subset(int t, int n, Rng& rng) {
  require(t >= 1 && t <= n, Err::InvalidKeepCount, "subset size out of range");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < t; ++i) {
    int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(t);
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline std::vector<std::vector<int>> random_digit_sets(int t, int n, int count, Rng& rng) {
  std::vector<std::vector<int>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_subset(t, n, rng));
  return out;
}

}  // namespace salem
