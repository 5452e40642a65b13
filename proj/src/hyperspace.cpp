#include "fintopo/hyperspace.hpp"

#include <algorithm>
#include <set>

namespace fintopo {
namespace {

std::vector<std::string> carrier_names(const FiniteSpace& base) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(base.open_count()));
  for (PointMask u : base.opens()) names.push_back(base.set_to_string(u));
  return names;
}

// Closure of a set of masks under pairwise AND (and_close) / OR.
void close_under(std::set<std::uint64_t>& sets, bool use_and) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(sets.begin(), sets.end());
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        const std::uint64_t c = use_and ? (cur[i] & cur[j]) : (cur[i] | cur[j]);
        if (sets.insert(c).second) grew = true;
      }
    }
  }
}

SpacePtr topology_from_subbase(int carrier_n, std::vector<std::uint64_t> subbase,
                               std::vector<std::string> names) {
  std::set<std::uint64_t> sets(subbase.begin(), subbase.end());
  sets.insert(0);
  sets.insert(full_mask(carrier_n));
  close_under(sets, /*use_and=*/true);
  close_under(sets, /*use_and=*/false);
  return make_space(carrier_n, std::vector<PointMask>(sets.begin(), sets.end()),
                    std::move(names));
}

}  // namespace

HyperTopology generate_topology(const FamilyCollection& col) {
  const FiniteSpace& base = *col.space();
  std::vector<std::uint64_t> subbase(col.families().begin(), col.families().end());
  return HyperTopology{col.space(),
                       topology_from_subbase(base.open_count(), std::move(subbase),
                                             carrier_names(base))};
}

ComparisonResult compare_topologies(const FiniteSpace& t1, const FiniteSpace& t2) {
  if (t1.point_count() != t2.point_count())
    throw TopoError(errc::carrier_mismatch, "topologies live on different carriers");
  ComparisonResult res{TopologyOrder::equal, std::nullopt, std::nullopt};
  for (PointMask u : t1.opens()) {
    if (!t2.is_open(u)) {
      res.only_in_first = u;
      break;
    }
  }
  for (PointMask u : t2.opens()) {
    if (!t1.is_open(u)) {
      res.only_in_second = u;
      break;
    }
  }
  if (res.only_in_first && res.only_in_second) res.order = TopologyOrder::incomparable;
  else if (res.only_in_first) res.order = TopologyOrder::finer;
  else if (res.only_in_second) res.order = TopologyOrder::coarser;
  return res;
}

ComparisonResult compare_hyper(const HyperTopology& t1, const HyperTopology& t2) {
  if (*t1.base != *t2.base)
    throw TopoError(errc::carrier_mismatch, "hyperspaces have different base spaces");
  return compare_topologies(*t1.topology, *t2.topology);
}

SpacePtr product_space(const FiniteSpace& t1, const FiniteSpace& t2) {
  const int n1 = t1.point_count(), n2 = t2.point_count();
  if (n1 > 0 && n2 > 0 && n1 * n2 > 64)
    throw TopoError(errc::too_large, "product carrier exceeds 64 points");
  const int n = n1 * n2;
  auto embed = [&](PointMask u, PointMask v) {
    std::uint64_t rect = 0;
    for (int i = 0; i < n1; ++i)
      if (u >> i & 1)
        for (int j = 0; j < n2; ++j)
          if (v >> j & 1) rect |= std::uint64_t{1} << (i * n2 + j);
    return rect;
  };
  std::set<std::uint64_t> sets;
  for (PointMask u : t1.opens())
    for (PointMask v : t2.opens()) sets.insert(embed(u, v));
  sets.insert(0);
  close_under(sets, /*use_and=*/false);  // unions of rectangles
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      names.push_back("(" + t1.point_name(i) + "," + t2.point_name(j) + ")");
  return make_space(n, std::vector<PointMask>(sets.begin(), sets.end()), std::move(names));
}

std::vector<std::vector<int>> continuous_maps(const FiniteSpace& x, const FiniteSpace& y) {
  const int nx = x.point_count(), ny = y.point_count();
  std::vector<std::vector<int>> out;
  if (ny == 0) {
    if (nx == 0) out.push_back({});
    return out;
  }
  double count = 1;
  for (int i = 0; i < nx; ++i) count *= ny;
  if (count > 1e6) throw TopoError(errc::too_large, "too many candidate maps");
  std::vector<int> f(static_cast<size_t>(nx), 0);
  while (true) {
    bool continuous = true;
    for (PointMask v : y.opens()) {
      PointMask pre = 0;
      for (int p = 0; p < nx; ++p)
        if (v >> f[static_cast<size_t>(p)] & 1) pre |= PointMask{1} << p;
      if (!x.is_open(pre)) {
        continuous = false;
        break;
      }
    }
    if (continuous) out.push_back(f);
    int p = nx - 1;
    while (p >= 0 && f[static_cast<size_t>(p)] == ny - 1) f[static_cast<size_t>(p--)] = 0;
    if (p < 0) break;
    ++f[static_cast<size_t>(p)];
  }
  return out;
}

FunctionSpace function_space(SpacePtr x, SpacePtr y, const FamilyCollection& col) {
  require_same_space(*x, *col.space());
  auto maps = continuous_maps(*x, *y);
  if (maps.size() > 64)
    throw TopoError(errc::too_large, "function space carrier exceeds 64 maps");
  const int nm = static_cast<int>(maps.size());
  auto preimage = [&](const std::vector<int>& f, PointMask v) {
    PointMask pre = 0;
    for (int p = 0; p < x->point_count(); ++p)
      if (v >> f[static_cast<size_t>(p)] & 1) pre |= PointMask{1} << p;
    return pre;
  };
  std::vector<std::uint64_t> subbase;
  const int empty_idx = 0;  // canonical index of the empty open
  for (int fi = 0; fi < col.size(); ++fi) {
    const FamilyMask fam = col.families()[static_cast<size_t>(fi)];
    if (fam >> empty_idx & 1) continue;  // the empty set must not be a member
    for (PointMask v : y->opens()) {
      std::uint64_t cell = 0;
      for (int mi = 0; mi < nm; ++mi) {
        const int idx = x->open_index(preimage(maps[static_cast<size_t>(mi)], v));
        if (fam >> idx & 1) cell |= std::uint64_t{1} << mi;
      }
      subbase.push_back(cell);
    }
  }
  std::vector<std::string> names;
  for (const auto& f : maps) {
    std::string s = "[";
    for (size_t p = 0; p < f.size(); ++p) {
      if (p) s += ",";
      s += x->point_name(static_cast<int>(p)) + ":" + y->point_name(f[p]);
    }
    names.push_back(s + "]");
  }
  SpacePtr topo = topology_from_subbase(nm, std::move(subbase), std::move(names));
  return FunctionSpace{std::move(x), std::move(y), std::move(maps), std::move(topo)};
}

SpacePtr sierpinski_observer() {
  static const SpacePtr s = make_space(2, {0, 1, 3}, {"0", "1"});
  return s;
}

bool function_space_matches_dual(SpacePtr x, const FamilyCollection& col) {
  const FunctionSpace fs = function_space(x, sierpinski_observer(), col);
  const HyperTopology hy = generate_topology(col);
  const int nm = static_cast<int>(fs.maps.size());
  if (nm != x->open_count()) return false;
  // map index -> open index via the preimage of {0}
  std::vector<int> to_open(static_cast<size_t>(nm), -1);
  std::vector<char> hit(static_cast<size_t>(nm), 0);
  for (int mi = 0; mi < nm; ++mi) {
    PointMask pre = 0;
    for (int p = 0; p < x->point_count(); ++p)
      if (fs.maps[static_cast<size_t>(mi)][static_cast<size_t>(p)] == 0)
        pre |= PointMask{1} << p;
    const int idx = x->open_index(pre);
    if (idx < 0 || hit[static_cast<size_t>(idx)]) return false;
    hit[static_cast<size_t>(idx)] = 1;
    to_open[static_cast<size_t>(mi)] = idx;
  }
  // Both directions: images of opens are opens.
  for (PointMask w : fs.topology->opens()) {
    std::uint64_t img = 0;
    for (int mi = 0; mi < nm; ++mi)
      if (w >> mi & 1) img |= std::uint64_t{1} << to_open[static_cast<size_t>(mi)];
    if (!hy.topology->is_open(img)) return false;
  }
  for (PointMask w : hy.topology->opens()) {
    std::uint64_t pre = 0;
    for (int mi = 0; mi < nm; ++mi)
      if (w >> to_open[static_cast<size_t>(mi)] & 1) pre |= std::uint64_t{1} << mi;
    if (!fs.topology->is_open(pre)) return false;
  }
  return true;
}

bool meet_jointly_continuous(const FamilyCollection& col) {
  const FiniteSpace& base = *col.space();
  const HyperTopology hy = generate_topology(col);
  const FiniteSpace& t = *hy.topology;
  const int m = base.open_count();
  // meet table on the carrier
  std::vector<std::vector<int>> meet(static_cast<size_t>(m), std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      meet[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          base.open_index(base.open_at(i) & base.open_at(j));
  const Preorder order = specialization_preorder(t);
  for (PointMask w : t.opens()) {
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        if (!(w >> meet[static_cast<size_t>(u)][static_cast<size_t>(v)] & 1)) continue;
        // every pair above (u, v) in the product order must land in w too
        const PointMask us = order.up[static_cast<size_t>(u)];
        const PointMask vs = order.up[static_cast<size_t>(v)];
        for (int u2 = 0; u2 < m; ++u2) {
          if (!(us >> u2 & 1)) continue;
          for (int v2 = 0; v2 < m; ++v2) {
            if (!(vs >> v2 & 1)) continue;
            if (!(w >> meet[static_cast<size_t>(u2)][static_cast<size_t>(v2)] & 1))
              return false;
          }
        }
      }
    }
  }
  return true;
}

SpaceReport classify_space(SpacePtr space, int bound) {
  SpaceReport r;
  r.open_count = space->open_count();
  const FamilyCollection kappa = all_compact_families(space, bound);
  const FamilyCollection k = compactly_generated_collection(space);
  const FamilyCollection lambda =
      greatest_fixed_subcollection(kappa, FixedPointCondition::joinable);
  const FamilyCollection lambda_down =
      greatest_fixed_subcollection(kappa, FixedPointCondition::hereditarily_joinable);
  const FamilyCollection sigma =
      greatest_fixed_subcollection(kappa, FixedPointCondition::splittable);
  r.kappa_size = kappa.size();
  r.k_size = k.size();
  r.lambda_size = lambda.size();
  r.lambda_down_size = lambda_down.size();
  r.sigma_size = sigma.size();
  r.consonant =
      compare_hyper(generate_topology(k), generate_topology(kappa)).order ==
      TopologyOrder::equal;
  r.infraconsonant = is_self_joinable(kappa);
  r.compactly_splittable = true;
  for (int i = 0; i < kappa.size() && r.compactly_splittable; ++i)
    r.compactly_splittable = is_splittable_rel(kappa.family_at(i), kappa);
  r.inclusions_ok = k.subset_of_collection(lambda_down) &&
                    lambda_down.subset_of_collection(lambda) &&
                    lambda.subset_of_collection(kappa) &&
                    lambda_down.subset_of_collection(sigma) &&
                    sigma.subset_of_collection(kappa);
  return r;
}

}  // namespace fintopo
