#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fintopo/battery.hpp"
#include "fintopo/dot.hpp"
#include "fintopo/enumerate.hpp"
#include "fintopo/json_io.hpp"
#include "fintopo/search.hpp"

namespace py = pybind11;
using namespace fintopo;
using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> set_names(const FiniteSpace& s, PointMask m) {
  std::vector<std::string> out;
  for (int p = 0; p < s.point_count(); ++p)
    if (m >> p & 1) out.push_back(s.point_name(p));
  return out;
}

PointMask mask_from_list(const FiniteSpace& s, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& n : names) arr.push_back(n);
  return point_set_from_json(s, arr);
}

SplitMode split_mode(bool strict) { return strict ? SplitMode::strict : SplitMode::padded; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite topological spaces: compact families, dual topologies, "
            "fixed-point collections, measure level families";

  py::register_exception<TopoError>(m, "TopoError");

  py::class_<FiniteSpace, std::shared_ptr<FiniteSpace>>(m, "Space")
      .def_static(
          "from_json",
          [](const std::string& text) { return space_from_json(Json::parse(text)); },
          py::arg("text"))
      .def_static(
          "from_opens",
          [](int n, const std::vector<PointMask>& opens,
             const std::vector<std::string>& names) { return make_space(n, opens, names); },
          py::arg("n"), py::arg("opens"), py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("n", &FiniteSpace::point_count)
      .def_property_readonly("opens", [](const FiniteSpace& s) { return s.opens(); })
      .def("open_index", &FiniteSpace::open_index, py::arg("mask"))
      .def("is_open", &FiniteSpace::is_open, py::arg("mask"))
      .def("interior", &FiniteSpace::interior, py::arg("mask"))
      .def("closure", &FiniteSpace::closure, py::arg("mask"))
      .def("is_regular", &FiniteSpace::is_regular)
      .def("is_prime", &FiniteSpace::is_prime)
      .def("set_to_names",
           [](const FiniteSpace& s, PointMask mask) { return set_names(s, mask); },
           py::arg("mask"))
      .def("mask",
           [](const FiniteSpace& s, const std::vector<std::string>& names) {
             return mask_from_list(s, names);
           },
           py::arg("names"))
      .def("to_json", [](const FiniteSpace& s) { return space_to_json(s).dump(); })
      .def("__eq__", [](const FiniteSpace& a, const FiniteSpace& b) { return a == b; })
      .def("__repr__", [](const FiniteSpace& s) {
        return "<Space n=" + std::to_string(s.point_count()) + " opens=" +
               std::to_string(s.open_count()) + ">";
      });

  m.def("space_from_preorder",
        [](int n, const std::vector<std::pair<int, int>>& pairs,
           const std::vector<std::string>& names) {
          Preorder p;
          p.n = n;
          p.up.assign(static_cast<size_t>(n), 0);
          for (int i = 0; i < n; ++i) p.up[static_cast<size_t>(i)] |= PointMask{1} << i;
          for (const auto& [a, b] : pairs) p.up[static_cast<size_t>(a)] |= PointMask{1} << b;
          return alexandrov_from_preorder(p, names);
        },
        py::arg("n"), py::arg("pairs"), py::arg("names") = std::vector<std::string>{});
  m.def("specialization_pairs", [](const SpacePtr& s) {
    const Preorder p = specialization_preorder(*s);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (p.up[static_cast<size_t>(i)] >> j & 1) pairs.emplace_back(i, j);
    return pairs;
  });

  py::class_<OpenFamily>(m, "Family")
      .def_property_readonly("members", &OpenFamily::members)
      .def_property_readonly("minimal_sets", &OpenFamily::minimal_sets)
      .def_property_readonly("member_sets", &OpenFamily::member_sets)
      .def_property_readonly("space", &OpenFamily::space)
      .def("contains", &OpenFamily::contains, py::arg("open_set"))
      .def("to_json",
           [](const OpenFamily& f) { return family_to_json(f).dump(); })
      .def("__eq__", [](const OpenFamily& a, const OpenFamily& b) { return a == b; })
      .def("__len__", &OpenFamily::size)
      .def("__repr__", [](const OpenFamily& f) {
        std::string out = "<Family {";
        bool first = true;
        for (PointMask s : f.minimal_sets()) {
          if (!first) out += ", ";
          out += f.space()->set_to_string(s);
          first = false;
        }
        return out + "}+>";
      });

  m.def("isotone_hull",
        [](const SpacePtr& s, const std::vector<PointMask>& seeds) {
          return isotone_hull(s, std::span<const PointMask>(seeds));
        },
        py::arg("space"), py::arg("seeds"));
  m.def("family_from_members", &OpenFamily::from_members, py::arg("space"),
        py::arg("members"));
  m.def("empty_family", &empty_family, py::arg("space"));
  m.def("all_opens_family", &all_opens_family, py::arg("space"));
  m.def("is_compact_family",
        [](const OpenFamily& f, const std::string& mode, int bound) {
          return is_compact_family(f, mode == "oracle" ? CompactMode::oracle : CompactMode::fast,
                                   bound);
        },
        py::arg("family"), py::arg("mode") = "fast", py::arg("oracle_bound") = 16);
  m.def("grill", &grill, py::arg("family"));
  m.def("in_grill", &in_grill, py::arg("family"), py::arg("set"));
  m.def("restrict_to", &restrict_to, py::arg("family"), py::arg("target"),
        py::arg("strict") = false);
  m.def("section_by", &section_by, py::arg("family"), py::arg("closed_set"));
  m.def("pairwise_meet", &pairwise_meet, py::arg("g"), py::arg("h"));
  m.def("meet_within", &meet_within, py::arg("g"), py::arg("h"), py::arg("f"));
  m.def("family_intersection", &family_intersection, py::arg("f"), py::arg("g"));
  m.def("is_compactly_generated", &is_compactly_generated, py::arg("family"));

  py::class_<FamilyCollection>(m, "Collection")
      .def_property_readonly("families", &FamilyCollection::families)
      .def_property_readonly("space", &FamilyCollection::space)
      .def("contains", &FamilyCollection::contains, py::arg("members"))
      .def("family_at", &FamilyCollection::family_at, py::arg("index"))
      .def("subset_of", &FamilyCollection::subset_of_collection, py::arg("other"))
      .def("to_json", [](const FamilyCollection& c) { return collection_to_json(c).dump(); })
      .def("__eq__",
           [](const FamilyCollection& a, const FamilyCollection& b) { return a == b; })
      .def("__len__", &FamilyCollection::size)
      .def("__repr__", [](const FamilyCollection& c) {
        return "<Collection of " + std::to_string(c.size()) + " families>";
      });

  m.def("collection_of",
        [](const SpacePtr& s, const std::vector<FamilyMask>& fams) {
          return FamilyCollection::of(s, fams);
        },
        py::arg("space"), py::arg("families"));
  m.def("kappa", &all_compact_families, py::arg("space"),
        py::arg("bound") = kDefaultLatticeBound);
  m.def("k_collection", &compactly_generated_collection, py::arg("space"));
  m.def("p_collection", &finitely_generated_collection, py::arg("space"));
  m.def("lambda_collection", &largest_self_joinable, py::arg("space"),
        py::arg("bound") = kDefaultLatticeBound);
  m.def("lambda_down_collection", &largest_hereditarily_self_joinable, py::arg("space"),
        py::arg("bound") = kDefaultLatticeBound);
  m.def("sigma_collection",
        [](const SpacePtr& s, int bound) { return largest_self_splittable(s, bound); },
        py::arg("space"), py::arg("bound") = kDefaultLatticeBound);
  m.def("intersection_closure", &intersection_closure, py::arg("collection"));
  m.def("with_all_opens_family", &with_all_opens_family, py::arg("collection"));
  m.def("with_top_family", &with_top_family, py::arg("collection"));
  m.def("is_hereditary", &is_hereditary, py::arg("collection"));
  m.def("is_sectionable", &is_sectionable, py::arg("collection"));
  m.def("is_intersection_closed", &is_intersection_closed, py::arg("collection"));
  m.def("is_joinable_rel", &is_joinable_rel, py::arg("family"), py::arg("gamma"),
        py::arg("hereditary") = false);
  m.def("is_self_joinable", &is_self_joinable, py::arg("collection"),
        py::arg("hereditary") = false);
  m.def("is_splittable_rel",
        [](const OpenFamily& f, const FamilyCollection& g, bool strict) {
          return is_splittable_rel(f, g, split_mode(strict));
        },
        py::arg("family"), py::arg("gamma"), py::arg("strict") = false);
  m.def("is_self_splittable",
        [](const FamilyCollection& c, bool strict) {
          return is_self_splittable(c, split_mode(strict));
        },
        py::arg("collection"), py::arg("strict") = false);
  m.def("greatest_fixed_subcollection",
        [](const FamilyCollection& c, const std::string& condition) {
          FixedPointCondition cond;
          if (condition == "joinable") cond = FixedPointCondition::joinable;
          else if (condition == "hereditarily_joinable")
            cond = FixedPointCondition::hereditarily_joinable;
          else if (condition == "splittable") cond = FixedPointCondition::splittable;
          else throw TopoError(errc::bad_input, "unknown condition '" + condition + "'");
          return greatest_fixed_subcollection(c, cond);
        },
        py::arg("collection"), py::arg("condition"));
  m.def("classify_space",
        [](const SpacePtr& s, int bound) {
          return report_to_json(classify_space(s, bound)).dump();
        },
        py::arg("space"), py::arg("bound") = kDefaultLatticeBound);

  m.def("generate_topology",
        [](const FamilyCollection& c) { return generate_topology(c).topology; },
        py::arg("collection"));
  m.def("compare_topologies",
        [](const SpacePtr& a, const SpacePtr& b) {
          const auto r = compare_topologies(*a, *b);
          switch (r.order) {
            case TopologyOrder::equal: return "equal";
            case TopologyOrder::coarser: return "coarser";
            case TopologyOrder::finer: return "finer";
            default: return "incomparable";
          }
        },
        py::arg("t1"), py::arg("t2"));
  m.def("product_space",
        [](const SpacePtr& a, const SpacePtr& b) { return product_space(*a, *b); },
        py::arg("t1"), py::arg("t2"));
  m.def("continuous_maps",
        [](const SpacePtr& x, const SpacePtr& y) { return continuous_maps(*x, *y); },
        py::arg("x"), py::arg("y"));
  m.def("function_space_topology",
        [](const SpacePtr& x, const SpacePtr& y, const FamilyCollection& col) {
          return function_space(x, y, col).topology;
        },
        py::arg("x"), py::arg("y"), py::arg("collection"));
  m.def("sierpinski_observer", &sierpinski_observer);
  m.def("function_space_matches_dual", &function_space_matches_dual, py::arg("space"),
        py::arg("collection"));
  m.def("meet_jointly_continuous", &meet_jointly_continuous, py::arg("collection"));

  py::class_<PointMeasure>(m, "Measure")
      .def(py::init([](const SpacePtr& s, const std::vector<std::string>& weights) {
             std::vector<Rational> w;
             for (const auto& t : weights) w.push_back(parse_rational(t));
             return PointMeasure(s, std::move(w));
           }),
           py::arg("space"), py::arg("weights"))
      .def_static(
          "from_json",
          [](const std::string& text) { return measure_from_json(Json::parse(text)); },
          py::arg("text"))
      .def("measure_of",
           [](const PointMeasure& mu, PointMask s) {
             return rational_to_string(mu.measure_of(s));
           },
           py::arg("set"))
      .def_property_readonly("space", &PointMeasure::space);

  m.def("level_family",
        [](const PointMeasure& mu, const std::string& r) {
          return level_family(mu, parse_rational(r));
        },
        py::arg("measure"), py::arg("r"));
  m.def("representative_thresholds", [](const PointMeasure& mu) {
    std::vector<std::string> out;
    for (const Rational& r : representative_thresholds(mu))
      out.push_back(rational_to_string(r));
    return out;
  });
  m.def("measure_level_collection", &measure_level_collection, py::arg("measure"));
  m.def("verify_selfjoin",
        [](const PointMeasure& mu, PointMask u, const std::string& r) {
          const auto rep = verify_selfjoin(mu, u, parse_rational(r));
          py::dict d;
          d["pass"] = rep.pass;
          d["m"] = rational_to_string(rep.midpoint);
          if (rep.violation)
            d["violation"] = py::make_tuple(rep.violation->first, rep.violation->second);
          else d["violation"] = py::none();
          return d;
        },
        py::arg("measure"), py::arg("open_set"), py::arg("r"));
  m.def("verify_selfsplit",
        [](const PointMeasure& mu, PointMask u1, PointMask u2, const std::string& r) {
          const auto rep = verify_selfsplit(mu, u1, u2, parse_rational(r));
          py::dict d;
          d["pass"] = rep.pass;
          d["d"] = rational_to_string(rep.slack);
          d["m1"] = rational_to_string(rep.m1);
          d["m2"] = rational_to_string(rep.m2);
          if (rep.violation) d["violation"] = *rep.violation;
          else d["violation"] = py::none();
          return d;
        },
        py::arg("measure"), py::arg("u1"), py::arg("u2"), py::arg("r"));

  m.def("enumerate_spaces", &enumerate_spaces, py::arg("n"), py::arg("up_to_iso") = false);
  m.def("random_space", &random_space, py::arg("n"), py::arg("seed"));
  m.def("run_battery",
        [](const SpacePtr& s, bool timings) {
          BatteryOptions opts;
          opts.include_timings = timings;
          return battery_report_to_json(run_battery(s, opts), opts).dump();
        },
        py::arg("space"), py::arg("timings") = false);
  m.def("search",
        [](const std::string& spec_json) {
          const SearchSpec spec = search_spec_from_json(Json::parse(spec_json));
          return search_result_to_json(spec, search(spec)).dump();
        },
        py::arg("spec_json"));
  m.def("export_dot_lattice", [](const SpacePtr& s) { return export_dot_lattice(*s); },
        py::arg("space"));
  m.def("export_dot_inclusion_diagram", &export_dot_inclusion_diagram, py::arg("space"),
        py::arg("bound") = kDefaultLatticeBound);
}
