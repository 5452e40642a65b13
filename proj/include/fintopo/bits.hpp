#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace fintopo {

/// Subsets of points of a space, one bit per point (point i = bit i).
using PointMask = std::uint64_t;

/// Subsets of the open-set list of a space, one bit per open index.
using FamilyMask = std::uint64_t;

inline int popcount(std::uint64_t m) { return std::popcount(m); }

inline bool subset_of(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Visits every submask of `m` in increasing numeric order (starting at 0,
/// ending at m). `fn` returns false to stop early; the visitor then returns
/// false as well.
template <typename Fn>
bool for_each_submask(std::uint64_t m, Fn&& fn) {
  std::uint64_t s = 0;
  while (true) {
    if (!fn(s)) return false;
    if (s == m) return true;
    s = (s - m) & m;  // next submask in increasing order
  }
}

/// Deterministic uniform integer in [0, bound) from a mt19937_64 stream.
/// Avoids std::uniform_int_distribution, whose output is not pinned by the
/// standard across library implementations.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

}  // namespace fintopo
