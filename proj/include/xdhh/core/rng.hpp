#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace xdhh {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// A run seed spawns one sub-stream per side of the domain barrier (0 = domain,
// 1 = hyper-heuristic) so the two never consume each other's draws.
inline std::uint64_t substream_seed(std::uint64_t run_seed, std::uint64_t stream) {
  std::uint64_t state = run_seed;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= stream; ++i) out = splitmix64(state);
  return out;
}

// mt19937_64 with fixed-algorithm distribution helpers. std:: distributions are
// implementation-defined, which would break bit-reproducible runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n), n >= 1 (Lemire multiply-shift).
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  long long next_int(long long lo, long long hi) {
    return lo + static_cast<long long>(next_index(static_cast<std::size_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bool(double p = 0.5) { return next_double() < p; }

  template <class It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::size_t>(last - first);
    for (std::size_t i = n; i > 1; --i)
      std::swap(first[i - 1], first[next_index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// k distinct indices drawn uniformly from [0, n), in draw order.
inline std::vector<std::size_t> sample_distinct(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  if (k > n) k = n;
  for (std::size_t i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + rng.next_index(n - i)]);
  pool.resize(k);
  return pool;
}

}  // namespace xdhh
