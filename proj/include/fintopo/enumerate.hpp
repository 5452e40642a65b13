#pragma once

#include <cstdint>

#include "fintopo/space.hpp"

namespace fintopo {

/// All labeled topologies on n points, via the reflexive-transitive
/// relations. Exhaustive mode is capped at n <= 4 (counts 1, 1, 4, 29, 355).
/// With up_to_iso, keeps one representative per homeomorphism class
/// (canonical form over all point permutations).
std::vector<SpacePtr> enumerate_spaces(int n, bool up_to_iso = false);

/// Deterministic valid topology for a fixed seed: a random relation is
/// closed reflexively and transitively, then converted to its up-set
/// topology.
SpacePtr random_space(int n, std::uint64_t seed);

/// Lexicographically smallest open list over all point permutations.
std::vector<PointMask> canonical_form(const FiniteSpace& s);

}  // namespace fintopo
