#include "fintopo/dot.hpp"

#include <sstream>

namespace fintopo {
namespace {

std::string lattice_digraph(const FiniteSpace& s, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < s.open_count(); ++i)
    out << "  n" << i << " [label=\"" << s.set_to_string(s.open_at(i)) << "\"];\n";
  // covering relation: u < v with nothing strictly between
  for (int i = 0; i < s.open_count(); ++i) {
    for (int j = 0; j < s.open_count(); ++j) {
      if (i == j) continue;
      const PointMask u = s.open_at(i), v = s.open_at(j);
      if (!(subset_of(u, v) && u != v)) continue;
      bool covering = true;
      for (int k = 0; k < s.open_count() && covering; ++k) {
        if (k == i || k == j) continue;
        const PointMask w = s.open_at(k);
        if (subset_of(u, w) && u != w && subset_of(w, v) && w != v) covering = false;
      }
      if (covering) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot_lattice(const FiniteSpace& s) {
  return lattice_digraph(s, "open_lattice");
}

std::string export_dot_hyper(const HyperTopology& t) {
  return lattice_digraph(*t.topology, "hyperspace");
}

std::string export_dot_inclusion_diagram(SpacePtr space, int bound) {
  const FamilyCollection kappa = all_compact_families(space, bound);
  const FamilyCollection k = compactly_generated_collection(space);
  const FamilyCollection lambda =
      greatest_fixed_subcollection(kappa, FixedPointCondition::joinable);
  const FamilyCollection lambda_down =
      greatest_fixed_subcollection(kappa, FixedPointCondition::hereditarily_joinable);
  const FamilyCollection sigma =
      greatest_fixed_subcollection(kappa, FixedPointCondition::splittable);
  std::ostringstream out;
  out << "digraph inclusion_diagram {\n  rankdir=LR;\n";
  auto node = [&](const char* id, const char* label, int size) {
    out << "  " << id << " [label=\"" << label << " (" << size << ")\"];\n";
  };
  node("k", "k", k.size());
  node("lambda_down", "lambda_down", lambda_down.size());
  node("lambda", "lambda", lambda.size());
  node("sigma", "sigma", sigma.size());
  node("kappa", "kappa", kappa.size());
  auto arrow = [&](const char* a, const char* b, bool equal) {
    out << "  " << a << " -> " << b;
    if (equal) out << " [label=\"=\"]";
    out << ";\n";
  };
  arrow("k", "lambda_down", k == lambda_down);
  arrow("lambda_down", "lambda", lambda_down == lambda);
  arrow("lambda_down", "sigma", lambda_down == sigma);
  arrow("lambda", "kappa", lambda == kappa);
  arrow("sigma", "kappa", sigma == kappa);
  out << "}\n";
  return out.str();
}

}  // namespace fintopo
