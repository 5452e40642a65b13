#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fintopo/family.hpp"

namespace fintopo {

/// A set of openly isotone families over one space. Families are stored as
/// sorted, deduplicated member masks (the canonical key), so membership and
/// equality are cheap.
class FamilyCollection {
 public:
  static FamilyCollection of(SpacePtr space, std::vector<FamilyMask> families);

  const SpacePtr& space() const { return space_; }
  const std::vector<FamilyMask>& families() const { return fams_; }
  int size() const { return static_cast<int>(fams_.size()); }
  bool contains(FamilyMask members) const;
  OpenFamily family_at(int i) const {
    return OpenFamily::from_members(space_, fams_[static_cast<size_t>(i)]);
  }

  bool operator==(const FamilyCollection& o) const { return fams_ == o.fams_; }
  bool operator!=(const FamilyCollection& o) const { return !(*this == o); }

  /// Subset relation on the family sets (same space required).
  bool subset_of_collection(const FamilyCollection& o) const;

 private:
  FamilyCollection(SpacePtr space, std::vector<FamilyMask> fams)
      : space_(std::move(space)), fams_(std::move(fams)) {}
  SpacePtr space_;
  std::vector<FamilyMask> fams_;
};

inline constexpr int kDefaultLatticeBound = 12;

/// Every openly isotone family over the space: all up-closed subsets of the
/// open lattice, the empty family and the family of all opens included.
/// Throws lattice_too_large when the open lattice exceeds `bound`.
FamilyCollection all_compact_families(SpacePtr space, int bound = kDefaultLatticeBound);

/// Families "all opens containing K", K ranging over all subsets
/// (every subset of a finite space is compact), deduplicated.
FamilyCollection compactly_generated_collection(SpacePtr space);

/// Same construction restricted to finite K; computed independently even
/// though every subset of a finite space is finite.
FamilyCollection finitely_generated_collection(SpacePtr space);

/// Smallest superset closed under pairwise family intersection.
FamilyCollection intersection_closure(const FamilyCollection& col);

/// Adds the family of all opens (which contains the empty set) to the
/// collection. Neutral element for family intersection; its restriction to
/// any open is itself.
FamilyCollection with_all_opens_family(const FamilyCollection& col);
/// Adds the family whose only member is the whole space.
FamilyCollection with_top_family(const FamilyCollection& col);

/// Every restriction of a member family to one of its members stays inside.
bool is_hereditary(const FamilyCollection& col);

/// Every section of a member family by a closed set of its grill stays
/// inside.
bool is_sectionable(const FamilyCollection& col);

/// Closed under pairwise family intersection.
bool is_intersection_closed(const FamilyCollection& col);

/// Some G in gamma has all pairwise meets of its members inside f.
/// The hereditary variant additionally pins each member of f inside the
/// chosen G.
bool is_joinable_rel(const OpenFamily& f, const FamilyCollection& gamma, bool hereditary);
bool is_self_joinable(const FamilyCollection& col, bool hereditary = false);

/// Witness pool for splitting. `strict` draws witnesses from gamma only —
/// the definition read literally. `padded` additionally admits the family of
/// all opens on either side, so a part of a decomposition that no family of
/// gamma can serve may be waived; that family is fixed under restriction to
/// every open and neutral for intersection, so only the other side
/// constrains. The padded pool is what makes the splitting predicate match
/// the joinable/hereditary/sectionable calculus (see the collection tests).
enum class SplitMode { strict, padded };

/// For every pair of opens whose union is a member of f there are families
/// G1, G2 in the pool, each fixed under restriction to its part, whose
/// intersection refines f.
bool is_splittable_rel(const OpenFamily& f, const FamilyCollection& gamma,
                       SplitMode mode = SplitMode::padded);
bool is_self_splittable(const FamilyCollection& col, SplitMode mode = SplitMode::padded);

enum class FixedPointCondition { joinable, hereditarily_joinable, splittable };

/// Iteratively removes families that fail the condition relative to the
/// surviving set, one full pass per round, until stable. Yields the largest
/// subcollection on which the corresponding "self-" predicate holds.
FamilyCollection greatest_fixed_subcollection(const FamilyCollection& col,
                                              FixedPointCondition condition,
                                              SplitMode mode = SplitMode::padded);

FamilyCollection largest_self_joinable(SpacePtr space, int bound = kDefaultLatticeBound);
FamilyCollection largest_hereditarily_self_joinable(SpacePtr space,
                                                    int bound = kDefaultLatticeBound);
FamilyCollection largest_self_splittable(SpacePtr space, int bound = kDefaultLatticeBound,
                                         SplitMode mode = SplitMode::padded);

struct SpaceReport {
  bool consonant = false;
  bool infraconsonant = false;
  bool compactly_splittable = false;
  bool inclusions_ok = false;
  int open_count = 0;
  int kappa_size = 0;
  int k_size = 0;
  int lambda_size = 0;
  int lambda_down_size = 0;
  int sigma_size = 0;
};

SpaceReport classify_space(SpacePtr space, int bound = kDefaultLatticeBound);

}  // namespace fintopo
