#pragma once

#include <string>

#include "fintopo/hyperspace.hpp"

namespace fintopo {

/// Hasse diagram of the open lattice as a DOT digraph (edges point from
/// smaller to larger open).
std::string export_dot_lattice(const FiniteSpace& s);

/// Same diagram for the carrier topology of a hyperspace.
std::string export_dot_hyper(const HyperTopology& t);

/// The five-node inclusion diagram k -> lambda_down -> {lambda, sigma} ->
/// kappa, annotated with the computed sizes for the given space and with
/// "=" marks on arrows joining equal collections.
std::string export_dot_inclusion_diagram(SpacePtr space, int bound = kDefaultLatticeBound);

}  // namespace fintopo
