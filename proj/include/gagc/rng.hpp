/*
 * Seeded, bit-portable sampling. mt19937_64 output is pinned by the standard;
 * the bounded draw uses rejection instead of uniform_int_distribution, whose
 * algorithm is implementation-defined. Same seed, same draws, any platform.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace gagc {

inline constexpr std::uint64_t kDefaultSeed = 0xA6C0DE;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t raw() { return g_(); }

  // Uniform in [0, n). Rejects below 2^64 mod n so residues are balanced.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = (-n) % n;
    for (;;) {
      std::uint64_t r = g_();
      if (r >= lim) return r % n;
    }
  }

  // Sorted k-subset of {0,...,n-1} via partial Fisher-Yates.
  std::vector<std::size_t> subset(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i)
      std::swap(idx[i], idx[i + below(n - i)]);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace gagc
