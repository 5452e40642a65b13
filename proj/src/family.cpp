#include "fintopo/family.hpp"

#include <algorithm>

namespace fintopo {

bool is_isotone(const FiniteSpace& s, FamilyMask members) {
  for (int i = 0; i < s.open_count(); ++i)
    if (members >> i & 1)
      if (!subset_of(s.supersets_of(i), members)) return false;
  return true;
}

FamilyMask minimal_antichain(const FiniteSpace& s, FamilyMask members) {
  FamilyMask minimal = 0;
  for (int i = 0; i < s.open_count(); ++i) {
    if (!(members >> i & 1)) continue;
    bool is_minimal = true;
    for (int j = 0; j < s.open_count() && is_minimal; ++j)
      if (j != i && (members >> j & 1) && subset_of(s.open_at(j), s.open_at(i)))
        is_minimal = false;
    if (is_minimal) minimal |= FamilyMask{1} << i;
  }
  return minimal;
}

OpenFamily OpenFamily::from_members(SpacePtr space, FamilyMask members) {
  if ((members & ~full_mask(space->open_count())) != 0)
    throw TopoError(errc::bad_input, "member mask references unknown opens");
  if (!is_isotone(*space, members))
    throw TopoError(errc::not_isotone, "family is not openly isotone");
  FamilyMask minimal = minimal_antichain(*space, members);
  return OpenFamily(std::move(space), members, minimal);
}

bool OpenFamily::contains(PointMask open_set) const {
  int idx = space_->open_index(open_set);
  return idx >= 0 && contains_index(idx);
}

std::vector<PointMask> OpenFamily::minimal_sets() const {
  std::vector<PointMask> out;
  for (int i = 0; i < space_->open_count(); ++i)
    if (minimal_ >> i & 1) out.push_back(space_->open_at(i));
  return out;
}

std::vector<PointMask> OpenFamily::member_sets() const {
  std::vector<PointMask> out;
  for (int i = 0; i < space_->open_count(); ++i)
    if (members_ >> i & 1) out.push_back(space_->open_at(i));
  return out;
}

OpenFamily isotone_hull(SpacePtr space, std::span<const PointMask> seeds) {
  FamilyMask members = 0;
  for (int i = 0; i < space->open_count(); ++i) {
    const PointMask u = space->open_at(i);
    for (PointMask b : seeds) {
      if (subset_of(b, u)) {
        members |= FamilyMask{1} << i;
        break;
      }
    }
  }
  return OpenFamily::from_members(std::move(space), members);
}

OpenFamily isotone_hull(SpacePtr space, std::initializer_list<PointMask> seeds) {
  std::vector<PointMask> v(seeds);
  return isotone_hull(std::move(space), std::span<const PointMask>(v));
}

OpenFamily empty_family(SpacePtr space) {
  return OpenFamily::from_members(std::move(space), 0);
}

OpenFamily all_opens_family(SpacePtr space) {
  FamilyMask all = full_mask(space->open_count());
  return OpenFamily::from_members(std::move(space), all);
}

bool is_compact_family(const FiniteSpace& s, FamilyMask members, CompactMode mode,
                       int oracle_bound) {
  if (mode == CompactMode::fast) return is_isotone(s, members);
  const int m = s.open_count();
  if (m > oracle_bound)
    throw TopoError(errc::oracle_too_large,
                    "open lattice of size " + std::to_string(m) +
                        " exceeds the oracle bound " + std::to_string(oracle_bound));
  // The definition asks for a family equal to its own hull of open supersets.
  FamilyMask hull = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if ((members >> j & 1) && subset_of(s.open_at(j), s.open_at(i))) {
        hull |= FamilyMask{1} << i;
        break;
      }
    }
  }
  if (hull != members) return false;
  // Unions of member masks, indexed by subfamily mask.
  std::vector<PointMask> union_of(size_t{1} << m, 0);
  for (FamilyMask p = 1; p < (FamilyMask{1} << m); ++p) {
    const int low = std::countr_zero(p);
    union_of[p] = union_of[p & (p - 1)] | s.open_at(low);
  }
  for (FamilyMask p = 0; p < (FamilyMask{1} << m); ++p) {
    const int u = s.open_index(union_of[p]);
    if (u < 0 || !(members >> u & 1)) continue;
    // Look for a finite subfamily of p whose union is a member; the empty
    // subfamily (union = empty set) is tried first.
    bool found = !for_each_submask(p, [&](FamilyMask sub) {
      const int w = s.open_index(union_of[sub]);
      return !(w >= 0 && (members >> w & 1));
    });
    if (!found) return false;
  }
  return true;
}

bool is_compact_family(const OpenFamily& f, CompactMode mode, int oracle_bound) {
  return is_compact_family(*f.space(), f.members(), mode, oracle_bound);
}

bool in_grill(const OpenFamily& f, PointMask b) {
  const FiniteSpace& s = *f.space();
  for (int i = 0; i < s.open_count(); ++i)
    if (f.minimal() >> i & 1)
      if ((s.open_at(i) & b) == 0) return false;
  return true;
}

std::vector<PointMask> grill(const OpenFamily& f) {
  const FiniteSpace& s = *f.space();
  if (s.point_count() > 24)
    throw TopoError(errc::too_large, "grill enumeration capped at 24 points");
  std::vector<PointMask> out;
  const PointMask all = s.points();
  for (PointMask b = 0;; ++b) {
    if (in_grill(f, b)) out.push_back(b);
    if (b == all) break;
  }
  return out;
}

OpenFamily restrict_to(const OpenFamily& f, PointMask a, bool strict) {
  const FiniteSpace& s = *f.space();
  if (strict && !f.contains(a))
    throw TopoError(errc::not_a_member, "restriction target is not a member");
  FamilyMask members = 0;
  const auto mins = f.minimal_sets();
  for (int i = 0; i < s.open_count(); ++i) {
    const PointMask cap = a & s.open_at(i);
    for (PointMask m : mins) {
      if (subset_of(m, cap)) {
        members |= FamilyMask{1} << i;
        break;
      }
    }
  }
  return OpenFamily::from_members(f.space(), members);
}

OpenFamily section_by(const OpenFamily& f, PointMask c) {
  const FiniteSpace& s = *f.space();
  if (!s.is_closed(c))
    throw TopoError(errc::not_closed_set, "section requires a closed set");
  if (!in_grill(f, c))
    throw TopoError(errc::not_in_grill, "section requires a set meeting every member");
  FamilyMask members = 0;
  const auto mins = f.minimal_sets();
  for (int i = 0; i < s.open_count(); ++i) {
    const PointMask u = s.open_at(i);
    for (PointMask m : mins) {
      if (subset_of(m & c, u)) {
        members |= FamilyMask{1} << i;
        break;
      }
    }
  }
  return OpenFamily::from_members(f.space(), members);
}

std::vector<PointMask> pairwise_meet(const OpenFamily& g, const OpenFamily& h) {
  require_same_space(*g.space(), *h.space());
  std::vector<PointMask> out;
  const auto gs = g.member_sets(), hs = h.member_sets();
  for (PointMask x : gs)
    for (PointMask y : hs) out.push_back(x & y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains_all(const OpenFamily& f, std::span<const PointMask> sets) {
  for (PointMask s : sets)
    if (!f.contains(s)) return false;
  return true;
}

bool meet_within(const OpenFamily& g, const OpenFamily& h, const OpenFamily& f) {
  require_same_space(*g.space(), *h.space());
  require_same_space(*g.space(), *f.space());
  const auto gs = g.minimal_sets(), hs = h.minimal_sets();
  for (PointMask x : gs)
    for (PointMask y : hs)
      if (!f.contains(x & y)) return false;
  return true;
}

OpenFamily family_intersection(const OpenFamily& f, const OpenFamily& g) {
  require_same_space(*f.space(), *g.space());
  return OpenFamily::from_members(f.space(), f.members() & g.members());
}

bool is_compactly_generated(const OpenFamily& f) {
  const FiniteSpace& s = *f.space();
  if (s.point_count() > 24)
    throw TopoError(errc::too_large, "generation check capped at 24 points");
  FamilyMask acc = 0;
  const PointMask all = s.points();
  for (PointMask k = 0;; ++k) {
    FamilyMask ok = 0;  // opens containing k
    for (int i = 0; i < s.open_count(); ++i)
      if (subset_of(k, s.open_at(i))) ok |= FamilyMask{1} << i;
    if (subset_of(ok, f.members())) acc |= ok;
    if (k == all) break;
  }
  return acc == f.members();
}

}  // namespace fintopo
