#include "fintopo/collection.hpp"

#include <algorithm>

namespace fintopo {
namespace {

struct Tables {
  // Per family: member mask, minimal mask, mask of all pairwise meets of
  // minimal members (as open indices), and per open u whether the family is
  // fixed under restriction to u.
  std::vector<FamilyMask> members;
  std::vector<FamilyMask> meets;
  std::vector<std::vector<char>> fixed;
  const FiniteSpace* space = nullptr;

  explicit Tables(const FamilyCollection& col) {
    space = col.space().get();
    const int m = space->open_count();
    members = col.families();
    meets.reserve(members.size());
    fixed.reserve(members.size());
    for (FamilyMask f : members) {
      const FamilyMask mins = minimal_antichain(*space, f);
      FamilyMask meet = 0;
      for (int i = 0; i < m; ++i) {
        if (!(mins >> i & 1)) continue;
        for (int j = i; j < m; ++j) {
          if (!(mins >> j & 1)) continue;
          meet |= FamilyMask{1} << space->open_index(space->open_at(i) & space->open_at(j));
        }
      }
      meets.push_back(meet);
      std::vector<char> fx(static_cast<size_t>(m), 0);
      for (int u = 0; u < m; ++u)
        fx[static_cast<size_t>(u)] = restricted_members(mins, space->open_at(u)) == f;
      fixed.push_back(std::move(fx));
    }
  }

  FamilyMask restricted_members(FamilyMask mins, PointMask a) const {
    FamilyMask out = 0;
    const int m = space->open_count();
    for (int i = 0; i < m; ++i) {
      const PointMask cap = a & space->open_at(i);
      for (int j = 0; j < m; ++j) {
        if ((mins >> j & 1) && subset_of(space->open_at(j), cap)) {
          out |= FamilyMask{1} << i;
          break;
        }
      }
    }
    return out;
  }
};

using Alive = std::vector<char>;

bool joinable_in(const Tables& t, size_t f, const Alive& alive) {
  for (size_t g = 0; g < t.members.size(); ++g)
    if (alive[g] && subset_of(t.meets[g], t.members[f])) return true;
  return false;
}

bool hereditarily_joinable_in(const Tables& t, size_t f, const Alive& alive) {
  const int m = t.space->open_count();
  for (int a = 0; a < m; ++a) {
    if (!(t.members[f] >> a & 1)) continue;
    bool found = false;
    for (size_t g = 0; g < t.members.size() && !found; ++g)
      found = alive[g] && (t.members[g] >> a & 1) && subset_of(t.meets[g], t.members[f]);
    if (!found) return false;
  }
  return true;
}

bool splittable_against(const Tables& t, FamilyMask fam, const Alive& alive, SplitMode mode) {
  const int m = t.space->open_count();
  const FamilyMask all = full_mask(m);
  const bool padded = mode == SplitMode::padded;
  auto side_candidates = [&](int u, auto&& fn) {
    if (padded && fn(all)) return true;
    for (size_t g = 0; g < t.members.size(); ++g)
      if (alive[g] && t.fixed[g][static_cast<size_t>(u)] && fn(t.members[g])) return true;
    return false;
  };
  for (int u1 = 0; u1 < m; ++u1) {
    for (int u2 = u1; u2 < m; ++u2) {
      const int w = t.space->open_index(t.space->open_at(u1) | t.space->open_at(u2));
      if (!(fam >> w & 1)) continue;
      const bool ok = side_candidates(u1, [&](FamilyMask g1) {
        return side_candidates(u2, [&](FamilyMask g2) {
          return subset_of(g1 & g2, fam);
        });
      });
      if (!ok) return false;
    }
  }
  return true;
}

FamilyCollection run_gfp(const FamilyCollection& col, FixedPointCondition cond,
                         SplitMode mode) {
  Tables t(col);
  Alive alive(t.members.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    Alive next = alive;
    for (size_t f = 0; f < t.members.size(); ++f) {
      if (!alive[f]) continue;
      bool keep = true;
      switch (cond) {
        case FixedPointCondition::joinable: keep = joinable_in(t, f, alive); break;
        case FixedPointCondition::hereditarily_joinable:
          keep = hereditarily_joinable_in(t, f, alive);
          break;
        case FixedPointCondition::splittable:
          keep = splittable_against(t, t.members[f], alive, mode);
          break;
      }
      if (!keep) {
        next[f] = 0;
        changed = true;
      }
    }
    alive = std::move(next);
  }
  std::vector<FamilyMask> out;
  for (size_t f = 0; f < t.members.size(); ++f)
    if (alive[f]) out.push_back(t.members[f]);
  return FamilyCollection::of(col.space(), std::move(out));
}

}  // namespace

FamilyCollection FamilyCollection::of(SpacePtr space, std::vector<FamilyMask> families) {
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  for (FamilyMask f : families) {
    if ((f & ~full_mask(space->open_count())) != 0)
      throw TopoError(errc::bad_input, "family mask references unknown opens");
    if (!is_isotone(*space, f))
      throw TopoError(errc::not_isotone, "collection contains a non-isotone family");
  }
  return FamilyCollection(std::move(space), std::move(families));
}

bool FamilyCollection::contains(FamilyMask members) const {
  return std::binary_search(fams_.begin(), fams_.end(), members);
}

bool FamilyCollection::subset_of_collection(const FamilyCollection& o) const {
  require_same_space(*space_, *o.space());
  return std::includes(o.fams_.begin(), o.fams_.end(), fams_.begin(), fams_.end());
}

FamilyCollection all_compact_families(SpacePtr space, int bound) {
  const int m = space->open_count();
  if (m > bound)
    throw TopoError(errc::lattice_too_large,
                    "open lattice of size " + std::to_string(m) +
                        " exceeds the enumeration bound " + std::to_string(bound));
  if (m > 22)
    throw TopoError(errc::lattice_too_large, "up-set enumeration capped at 22 opens");
  std::vector<FamilyMask> fams;
  const FamilyMask all = full_mask(m);
  for (FamilyMask f = 0;; ++f) {
    if (is_isotone(*space, f)) fams.push_back(f);
    if (f == all) break;
  }
  return FamilyCollection::of(std::move(space), std::move(fams));
}

namespace {
FamilyCollection generated_collection(SpacePtr space) {
  const int n = space->point_count();
  if (n > 20)
    throw TopoError(errc::too_large, "subset enumeration capped at 20 points");
  std::vector<FamilyMask> fams;
  const PointMask all = space->points();
  for (PointMask k = 0;; ++k) {
    FamilyMask f = 0;
    for (int i = 0; i < space->open_count(); ++i)
      if (subset_of(k, space->open_at(i))) f |= FamilyMask{1} << i;
    fams.push_back(f);
    if (k == all) break;
  }
  return FamilyCollection::of(std::move(space), std::move(fams));
}
}  // namespace

FamilyCollection compactly_generated_collection(SpacePtr space) {
  return generated_collection(std::move(space));
}

FamilyCollection finitely_generated_collection(SpacePtr space) {
  // On a finite space the finite subsets are all subsets; the loop is the
  // same and the setwise equality with the compact version is asserted in
  // the tests rather than assumed here.
  return generated_collection(std::move(space));
}

FamilyCollection intersection_closure(const FamilyCollection& col) {
  std::vector<FamilyMask> work = col.families();
  std::vector<FamilyMask> sorted = work;
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t sz = work.size();
    for (size_t i = 0; i < sz; ++i) {
      for (size_t j = i + 1; j < sz; ++j) {
        const FamilyMask meet = work[i] & work[j];
        if (!std::binary_search(sorted.begin(), sorted.end(), meet)) {
          work.push_back(meet);
          sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), meet), meet);
          grew = true;
        }
      }
    }
  }
  return FamilyCollection::of(col.space(), std::move(sorted));
}

FamilyCollection with_all_opens_family(const FamilyCollection& col) {
  std::vector<FamilyMask> fams = col.families();
  fams.push_back(full_mask(col.space()->open_count()));
  return FamilyCollection::of(col.space(), std::move(fams));
}

FamilyCollection with_top_family(const FamilyCollection& col) {
  std::vector<FamilyMask> fams = col.families();
  const int top = col.space()->open_count() - 1;
  fams.push_back(FamilyMask{1} << top);
  return FamilyCollection::of(col.space(), std::move(fams));
}

bool is_hereditary(const FamilyCollection& col) {
  for (int i = 0; i < col.size(); ++i) {
    const OpenFamily f = col.family_at(i);
    for (PointMask a : f.member_sets())
      if (!col.contains(restrict_to(f, a).members())) return false;
  }
  return true;
}

bool is_sectionable(const FamilyCollection& col) {
  const FiniteSpace& s = *col.space();
  for (int i = 0; i < col.size(); ++i) {
    const OpenFamily f = col.family_at(i);
    for (PointMask u : s.opens()) {
      const PointMask c = s.points() & ~u;
      if (!in_grill(f, c)) continue;
      if (!col.contains(section_by(f, c).members())) return false;
    }
  }
  return true;
}

bool is_intersection_closed(const FamilyCollection& col) {
  const auto& fams = col.families();
  for (size_t i = 0; i < fams.size(); ++i)
    for (size_t j = i + 1; j < fams.size(); ++j)
      if (!col.contains(fams[i] & fams[j])) return false;
  return true;
}

bool is_joinable_rel(const OpenFamily& f, const FamilyCollection& gamma, bool hereditary) {
  require_same_space(*f.space(), *gamma.space());
  if (!hereditary) {
    for (int g = 0; g < gamma.size(); ++g) {
      const OpenFamily gf = gamma.family_at(g);
      if (meet_within(gf, gf, f)) return true;
    }
    return false;
  }
  for (PointMask a : f.member_sets()) {
    bool found = false;
    for (int g = 0; g < gamma.size() && !found; ++g) {
      const OpenFamily gf = gamma.family_at(g);
      found = gf.contains(a) && meet_within(gf, gf, f);
    }
    if (!found) return false;
  }
  return true;
}

bool is_self_joinable(const FamilyCollection& col, bool hereditary) {
  for (int i = 0; i < col.size(); ++i)
    if (!is_joinable_rel(col.family_at(i), col, hereditary)) return false;
  return true;
}

bool is_splittable_rel(const OpenFamily& f, const FamilyCollection& gamma, SplitMode mode) {
  require_same_space(*f.space(), *gamma.space());
  Tables t(gamma);
  Alive alive(t.members.size(), 1);
  return splittable_against(t, f.members(), alive, mode);
}

bool is_self_splittable(const FamilyCollection& col, SplitMode mode) {
  Tables t(col);
  Alive alive(t.members.size(), 1);
  for (size_t f = 0; f < t.members.size(); ++f)
    if (!splittable_against(t, t.members[f], alive, mode)) return false;
  return true;
}

FamilyCollection greatest_fixed_subcollection(const FamilyCollection& col,
                                              FixedPointCondition condition, SplitMode mode) {
  return run_gfp(col, condition, mode);
}

FamilyCollection largest_self_joinable(SpacePtr space, int bound) {
  return run_gfp(all_compact_families(std::move(space), bound),
                 FixedPointCondition::joinable, SplitMode::padded);
}

FamilyCollection largest_hereditarily_self_joinable(SpacePtr space, int bound) {
  return run_gfp(all_compact_families(std::move(space), bound),
                 FixedPointCondition::hereditarily_joinable, SplitMode::padded);
}

FamilyCollection largest_self_splittable(SpacePtr space, int bound, SplitMode mode) {
  return run_gfp(all_compact_families(std::move(space), bound),
                 FixedPointCondition::splittable, mode);
}

}  // namespace fintopo
