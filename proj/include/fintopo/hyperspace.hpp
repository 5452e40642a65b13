#pragma once

#include "fintopo/collection.hpp"

namespace fintopo {

/// A topology whose points are the opens of a base space, carrier order
/// matching the base space's canonical open index.
struct HyperTopology {
  SpacePtr base;
  SpacePtr topology;  // point i of this space = base->open_at(i)
};

/// Topology on the open lattice generated by the member sets of the
/// collection as a subbase (finite intersections, then unions; empty and
/// full carrier adjoined).
HyperTopology generate_topology(const FamilyCollection& col);

enum class TopologyOrder { equal, coarser, finer, incomparable };

struct ComparisonResult {
  TopologyOrder order;
  // A distinguishing open (carrier mask) for each direction, when one side
  // has an open the other lacks.
  std::optional<PointMask> only_in_first;
  std::optional<PointMask> only_in_second;
};

/// Set-inclusion verdict on the opens of two spaces over the same carrier.
ComparisonResult compare_topologies(const FiniteSpace& t1, const FiniteSpace& t2);
ComparisonResult compare_hyper(const HyperTopology& t1, const HyperTopology& t2);

/// Carrier = pairs (i,j) with index i * n2 + j; opens = all unions of open
/// rectangles. Capped at 64 carrier points.
SpacePtr product_space(const FiniteSpace& t1, const FiniteSpace& t2);

/// All point maps f with every preimage of an open open, sorted by table.
std::vector<std::vector<int>> continuous_maps(const FiniteSpace& x, const FiniteSpace& y);

struct FunctionSpace {
  SpacePtr domain;
  SpacePtr codomain;
  std::vector<std::vector<int>> maps;
  SpacePtr topology;  // point i = maps[i]
};

/// Topology on the continuous maps generated by the sets
/// { f : preimage of U under f is a member of F }, F in the collection with
/// the empty set not a member of F, U open in the codomain.
FunctionSpace function_space(SpacePtr x, SpacePtr y, const FamilyCollection& col);

/// The two point space with exactly one nontrivial open {0}, so that maps
/// into it correspond to the opens of the domain via the preimage of {0}.
SpacePtr sierpinski_observer();

/// Whether function_space(x, sierpinski_observer(), col) is homeomorphic to
/// generate_topology(col) under the preimage-of-{0} bijection.
bool function_space_matches_dual(SpacePtr x, const FamilyCollection& col);

/// Whether (U, V) -> U ∩ V is jointly continuous from the product of the
/// generated topology with itself to the generated topology. Decided via the
/// specialization preorder of the generated topology: on finite spaces the
/// product opens are exactly the up-closed sets of the product order, so the
/// map is continuous iff every preimage of an open is up-closed. The
/// equivalence with the literal product construction is pinned by tests.
bool meet_jointly_continuous(const FamilyCollection& col);

}  // namespace fintopo
