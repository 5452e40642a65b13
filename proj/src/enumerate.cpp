#include "fintopo/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fintopo {

std::vector<SpacePtr> enumerate_spaces(int n, bool up_to_iso) {
  if (n < 1 || n > 4)
    throw TopoError(errc::too_large, "exhaustive enumeration supports 1 <= n <= 4");
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<SpacePtr> out;
  std::set<std::vector<PointMask>> seen;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << pairs); ++rel) {
    Preorder p;
    p.n = n;
    p.up.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) p.up[static_cast<size_t>(i)] |= PointMask{1} << i;
    for (int b = 0; b < pairs; ++b)
      if (rel >> b & 1)
        p.up[static_cast<size_t>(offdiag[static_cast<size_t>(b)].first)] |=
            PointMask{1} << offdiag[static_cast<size_t>(b)].second;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        if (p.up[static_cast<size_t>(i)] >> j & 1)
          transitive = subset_of(p.up[static_cast<size_t>(j)], p.up[static_cast<size_t>(i)]);
    if (!transitive) continue;
    SpacePtr s = alexandrov_from_preorder(p);
    if (up_to_iso) {
      auto canon = canonical_form(*s);
      if (!seen.insert(std::move(canon)).second) continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

SpacePtr random_space(int n, std::uint64_t seed) {
  if (n < 1 || n > 16)
    throw TopoError(errc::too_large, "random spaces support 1 <= n <= 16");
  std::mt19937_64 rng(seed);
  Preorder p;
  p.n = n;
  p.up.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) p.up[static_cast<size_t>(i)] |= PointMask{1} << i;
  // sparse random edges, then transitive closure
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng_below(rng, 3) == 0) p.up[static_cast<size_t>(i)] |= PointMask{1} << j;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.up[static_cast<size_t>(i)] >> k & 1)
        p.up[static_cast<size_t>(i)] |= p.up[static_cast<size_t>(k)];
  return alexandrov_from_preorder(p);
}

std::vector<PointMask> canonical_form(const FiniteSpace& s) {
  const int n = s.point_count();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PointMask> best;
  do {
    std::vector<PointMask> mapped;
    mapped.reserve(s.opens().size());
    for (PointMask u : s.opens()) {
      PointMask v = 0;
      for (int p = 0; p < n; ++p)
        if (u >> p & 1) v |= PointMask{1} << perm[static_cast<size_t>(p)];
      mapped.push_back(v);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace fintopo
