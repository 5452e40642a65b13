#pragma once

#include <span>
#include <vector>

#include "fintopo/space.hpp"

namespace fintopo {

/// An openly isotone family of open sets: whenever U is a member, every open
/// superset of U is a member too. Members are a bit mask over the canonical
/// open index of the space; the antichain of inclusion-minimal members is
/// computed once and cached. The members mask doubles as the canonical
/// equality and ordering key.
class OpenFamily {
 public:
  /// Throws not_isotone when `members` is not up-closed in the open lattice.
  static OpenFamily from_members(SpacePtr space, FamilyMask members);

  const SpacePtr& space() const { return space_; }
  FamilyMask members() const { return members_; }
  FamilyMask minimal() const { return minimal_; }
  bool empty() const { return members_ == 0; }
  int size() const { return popcount(members_); }

  bool contains_index(int idx) const { return (members_ >> idx) & 1; }
  bool contains(PointMask open_set) const;

  /// Minimal members as point masks.
  std::vector<PointMask> minimal_sets() const;
  std::vector<PointMask> member_sets() const;

  bool operator==(const OpenFamily& o) const { return members_ == o.members_; }
  bool operator<(const OpenFamily& o) const { return members_ < o.members_; }

 private:
  OpenFamily(SpacePtr space, FamilyMask members, FamilyMask minimal)
      : space_(std::move(space)), members_(members), minimal_(minimal) {}

  SpacePtr space_;
  FamilyMask members_;
  FamilyMask minimal_;
};

bool is_isotone(const FiniteSpace& s, FamilyMask members);
FamilyMask minimal_antichain(const FiniteSpace& s, FamilyMask members);

/// Opens containing at least one seed set. Seeds need not be open.
OpenFamily isotone_hull(SpacePtr space, std::span<const PointMask> seeds);
OpenFamily isotone_hull(SpacePtr space, std::initializer_list<PointMask> seeds);

/// The family with no members (a legal compact family).
OpenFamily empty_family(SpacePtr space);
/// The family of all opens (the only isotone family containing the empty set).
OpenFamily all_opens_family(SpacePtr space);

enum class CompactMode { fast, oracle };

/// fast: openly isotone (the two notions coincide on finite spaces).
/// oracle: checks the definition literally; for every subfamily P of the
/// opens whose union is a member, searches for a finite subfamily of P
/// (starting from the empty one) whose union is a member. Throws
/// oracle_too_large when the open lattice exceeds `oracle_bound`.
bool is_compact_family(const FiniteSpace& s, FamilyMask members, CompactMode mode,
                       int oracle_bound = 16);
bool is_compact_family(const OpenFamily& f, CompactMode mode, int oracle_bound = 16);

/// All subsets of the space meeting every member.
std::vector<PointMask> grill(const OpenFamily& f);
bool in_grill(const OpenFamily& f, PointMask b);

/// Opens U admitting a member inside A ∩ U. With strict=true, A must itself
/// be a member. The formula is well defined for any A; non-members give the
/// degenerate restriction (possibly empty).
OpenFamily restrict_to(const OpenFamily& f, PointMask a, bool strict = false);

/// Up-closure of the traces of the members on a closed set C meeting every
/// member. Throws not_closed_set / not_in_grill.
OpenFamily section_by(const OpenFamily& f, PointMask c);

/// All pairwise intersections of members, deduplicated and sorted.
std::vector<PointMask> pairwise_meet(const OpenFamily& g, const OpenFamily& h);

/// Every set in `sets` is a member of f.
bool contains_all(const OpenFamily& f, std::span<const PointMask> sets);

/// Whether every pairwise intersection of members of g and h is a member of
/// f. Decided on the minimal antichains: supersets of members intersect in
/// supersets, and f is isotone.
bool meet_within(const OpenFamily& g, const OpenFamily& h, const OpenFamily& f);

/// Members common to both families; isotone by construction.
OpenFamily family_intersection(const OpenFamily& f, const OpenFamily& g);

/// Whether f is a union of families "all opens containing K". On a finite
/// space every K is compact, so this checks the definition over all subsets.
bool is_compactly_generated(const OpenFamily& f);

}  // namespace fintopo
