#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fintopo/bits.hpp"
#include "fintopo/errors.hpp"

namespace fintopo {

/// A preorder on {0..n-1}. up[i] is the mask {j : i <= j}, diagonal included.
struct Preorder {
  int n = 0;
  std::vector<PointMask> up;

  /// Throws not_reflexive / not_transitive when the relation is not a preorder.
  void validate() const;
};

/// A finite topological space: n points and the lattice of open sets.
///
/// Opens are stored as bit masks, sorted ascending by numeric value, which
/// fixes a canonical index for every open; the empty set is index 0 and the
/// whole space is the last index. All values are immutable after
/// construction and safe to share across threads.
class FiniteSpace {
 public:
  /// Checks the topology axioms (empty and full present, closure under
  /// binary union and intersection) and returns the canonical space.
  /// Throws TopoError with a witness pair when closure fails.
  static FiniteSpace validate(int n, std::vector<PointMask> candidate_opens,
                              std::vector<std::string> names = {});

  int point_count() const { return n_; }
  PointMask points() const { return full_mask(n_); }
  int open_count() const { return static_cast<int>(opens_.size()); }
  const std::vector<PointMask>& opens() const { return opens_; }
  PointMask open_at(int idx) const { return opens_[static_cast<size_t>(idx)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `s` in the canonical open list, or -1 when `s` is not open.
  int open_index(PointMask s) const;
  bool is_open(PointMask s) const { return open_index(s) >= 0; }
  bool is_closed(PointMask s) const { return is_open(points() & ~s); }

  /// Mask over open indices: the opens that contain opens_[idx].
  FamilyMask supersets_of(int idx) const { return supersets_[static_cast<size_t>(idx)]; }

  /// Largest open contained in A.
  PointMask interior(PointMask a) const;
  /// Smallest closed set containing A.
  PointMask closure(PointMask a) const;
  /// Smallest open containing point p.
  PointMask min_open_at(int p) const { return core_[static_cast<size_t>(p)]; }

  /// Point separation from closed sets by disjoint opens.
  bool is_regular() const;

  /// Every singleton {x} open except possibly one (at most one non-isolated
  /// point).
  bool is_prime() const;

  bool operator==(const FiniteSpace& o) const {
    return n_ == o.n_ && opens_ == o.opens_;
  }
  bool operator!=(const FiniteSpace& o) const { return !(*this == o); }

  std::string point_name(int p) const;
  std::string set_to_string(PointMask s) const;

 private:
  FiniteSpace(int n, std::vector<PointMask> opens, std::vector<std::string> names);

  int n_;
  std::vector<PointMask> opens_;
  std::vector<std::string> names_;
  std::vector<FamilyMask> supersets_;
  std::vector<PointMask> core_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr make_space(int n, std::vector<PointMask> opens,
                    std::vector<std::string> names = {});

/// Opens are exactly the up-closed sets of the preorder.
SpacePtr alexandrov_from_preorder(const Preorder& p,
                                  std::vector<std::string> names = {});

/// x <= y iff every open containing x contains y. Inverse of
/// alexandrov_from_preorder on every finite space.
Preorder specialization_preorder(const FiniteSpace& s);

void require_same_space(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace fintopo
