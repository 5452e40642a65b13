// topo: finite topological space toolbox.
//
// Verbs: validate | analyze | collection | hyper | measure | search |
// export-dot. JSON in, JSON out; exit 0 = all pass, 1 = claim failure or
// counterexample found, 2 = usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fintopo/battery.hpp"
#include "fintopo/dot.hpp"
#include "fintopo/enumerate.hpp"
#include "fintopo/json_io.hpp"
#include "fintopo/search.hpp"

using namespace fintopo;
using Json = nlohmann::ordered_json;

namespace {

Json read_json(const std::string& path) {
  Json j;
  if (path.empty() || path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw TopoError(errc::bad_input, "cannot open '" + path + "'");
    in >> j;
  }
  return j;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
}

Json error_json(const TopoError& e) {
  Json j;
  j["error"] = Json::object({{"code", errc_name(e.code())}, {"message", e.what()}});
  return j;
}

std::vector<SpacePtr> spaces_for(const std::string& input, int exhaustive_n,
                                 const std::string& random_arg, bool up_to_iso = false) {
  std::vector<SpacePtr> spaces;
  if (exhaustive_n > 0) {
    for (int n = 1; n <= exhaustive_n; ++n)
      for (SpacePtr& s : enumerate_spaces(n, up_to_iso)) spaces.push_back(std::move(s));
  } else if (!random_arg.empty()) {
    // n:seed0:count
    int n = 4, count = 1;
    std::uint64_t seed0 = 0;
    if (std::sscanf(random_arg.c_str(), "%d:%llu:%d", &n,
                    reinterpret_cast<unsigned long long*>(&seed0), &count) < 1)
      throw TopoError(errc::bad_input, "--random expects n:seed:count");
    for (int i = 0; i < count; ++i)
      spaces.push_back(random_space(n, seed0 + static_cast<std::uint64_t>(i)));
  } else {
    spaces.push_back(resolve_space(read_json(input)));
  }
  return spaces;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topological space toolbox"};
  app.require_subcommand(1);

  std::string input, output, random_arg, collection_name = "kappa";
  std::string col_gen_name = "none";
  std::string compare_with, codomain_path, set_arg, set2_arg, r_arg = "1";
  std::string expr, spec_path, mode = "lattice";
  int exhaustive_n = 0, jobs = 1, bound = kDefaultLatticeBound;
  bool battery = false, timings = false, predicates = false, meet_continuity = false;
  bool up_to_iso = false;
  bool function_space_check = false;
  bool strict_split = false;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "input JSON file (default stdin)");
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate a space and canonicalize it");
  add_io(validate);

  CLI::App* analyze = app.add_subcommand("analyze", "classify a space / run the claim battery");
  add_io(analyze);
  analyze->add_option("--exhaustive", exhaustive_n, "run over all labeled spaces up to n");
  analyze->add_option("--random", random_arg, "run over random spaces, n:seed:count");
  analyze->add_flag("--up-to-iso", up_to_iso,
                    "deduplicate enumerated spaces by canonical form");
  analyze->add_flag("--battery", battery, "run the full claim battery");
  analyze->add_option("--jobs", jobs, "worker threads for batch runs");
  analyze->add_flag("--timings", timings, "include per-claim milliseconds in reports");
  analyze->add_option("--bound", bound, "family enumeration bound on the open lattice");

  CLI::App* collection = app.add_subcommand("collection", "emit or analyze a collection");
  add_io(collection);
  collection->add_option("--name", collection_name,
                         "builtin: kappa|k|p|lambda|lambda_down|sigma");
  collection->add_option("--in", spec_path, "explicit collection JSON instead of a builtin");
  collection->add_flag("--predicates", predicates, "report the collection predicates");
  collection->add_option("--bound", bound, "family enumeration bound");
  collection->add_flag("--strict-split", strict_split,
                       "evaluate splitting with witnesses from the collection only");

  CLI::App* hyper = app.add_subcommand("hyper", "dual topology on the open lattice");
  add_io(hyper);
  hyper->add_option("--name", collection_name, "builtin collection for the subbase");
  hyper->add_option("--compare", compare_with, "second builtin to compare against");
  hyper->add_flag("--meet-continuity", meet_continuity,
                  "check joint continuity of pairwise intersection");
  hyper->add_option("--function-space", codomain_path,
                    "codomain space JSON: emit the function space topology");
  hyper->add_flag("--check-identification", function_space_check,
                  "verify the two-point-observer identification");
  hyper->add_option("--bound", bound, "family enumeration bound");

  CLI::App* measure = app.add_subcommand("measure", "measure level families");
  CLI::App* verify_join = measure->add_subcommand("verify-join", "join inequality report");
  CLI::App* verify_split = measure->add_subcommand("verify-split", "split inequality report");
  CLI::App* gamma = measure->add_subcommand("gamma", "level collection and its predicates");
  for (CLI::App* cmd : {verify_join, verify_split, gamma}) {
    cmd->add_option("-i,--input", input, "measure JSON (default stdin)");
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  }
  verify_join->add_option("-U,--set", set_arg, "open set as a JSON name array")->required();
  verify_join->add_option("-r,--threshold", r_arg, "rational threshold")->required();
  verify_split->add_option("--U1", set_arg, "first open part")->required();
  verify_split->add_option("--U2", set2_arg, "second open part")->required();
  verify_split->add_option("-r,--threshold", r_arg, "rational threshold")->required();

  CLI::App* search_cmd = app.add_subcommand("search", "counterexample search");
  add_io(search_cmd);
  search_cmd->add_option("--expr", expr, "predicate expression");
  search_cmd->add_option("--spec", spec_path, "full search spec JSON file");
  search_cmd->add_option("--exhaustive", exhaustive_n, "exhaustive spaces up to n");
  search_cmd->add_option("--random", random_arg, "random spaces n:seed:count");
  search_cmd->add_option("--collections", col_gen_name,
                         "collection generator: none|builtins|exhaustive|sample");
  search_cmd->add_option("--bound", bound, "family enumeration bound");

  CLI::App* dot = app.add_subcommand("export-dot", "graphviz output");
  add_io(dot);
  dot->add_option("--mode", mode, "lattice | hyper | inclusion-diagram");
  dot->add_option("--name", collection_name, "builtin collection for hyper mode");
  dot->add_option("--bound", bound, "family enumeration bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      try {
        const SpacePtr s = resolve_space(read_json(input));
        Json j;
        j["valid"] = true;
        j["space"] = space_to_json(*s);
        emit(j, output);
        return 0;
      } catch (const TopoError& e) {
        Json j = error_json(e);
        j["valid"] = false;
        emit(j, output);
        return e.code() == errc::bad_input ? 2 : 1;
      }
    }

    if (analyze->parsed()) {
      const std::vector<SpacePtr> spaces = spaces_for(input, exhaustive_n, random_arg, up_to_iso);
      BatteryOptions opts;
      opts.lattice_bound = bound;
      opts.include_timings = timings;
      if (battery) {
        const auto reports = run_battery_batch(spaces, opts, jobs);
        emit(battery_batch_to_json(reports, opts), output);
        for (const auto& r : reports)
          if (!r.all_pass()) return 1;
        return 0;
      }
      Json out = Json::array();
      bool ok = true;
      for (const SpacePtr& s : spaces) {
        const SpaceReport r = classify_space(s, bound);
        Json row;
        row["space"] = space_to_json(*s);
        row["report"] = report_to_json(r);
        out.push_back(std::move(row));
        ok = ok && r.consonant && r.infraconsonant && r.compactly_splittable &&
             r.inclusions_ok;
      }
      emit(spaces.size() == 1 ? out.front() : Json::object({{"results", out}}), output);
      return ok ? 0 : 1;
    }

    if (collection->parsed()) {
      const Json j = read_json(input);
      const SpacePtr space = resolve_space(j.contains("space") ? j.at("space") : j);
      FamilyCollection col = spec_path.empty()
                                 ? builtin_collection(collection_name, space, bound)
                                 : collection_from_json(read_json(spec_path), space, bound);
      Json out = collection_to_json(col);
      if (predicates) {
        const SplitMode sm = strict_split ? SplitMode::strict : SplitMode::padded;
        Json p;
        p["self_joinable"] = is_self_joinable(col);
        p["hereditarily_self_joinable"] = is_self_joinable(col, true);
        p["hereditary"] = is_hereditary(col);
        p["sectionable"] = is_sectionable(col);
        p["self_splittable"] = is_self_splittable(col, sm);
        p["intersection_closed"] = is_intersection_closed(col);
        out["predicates"] = std::move(p);
      }
      emit(out, output);
      return 0;
    }

    if (hyper->parsed()) {
      const Json j = read_json(input);
      const SpacePtr space = resolve_space(j.contains("space") ? j.at("space") : j);
      const FamilyCollection col = builtin_collection(collection_name, space, bound);
      if (!codomain_path.empty()) {
        const SpacePtr y = resolve_space(read_json(codomain_path));
        const FunctionSpace fs = function_space(space, y, col);
        Json out;
        out["maps"] = fs.topology->point_count();
        out["topology"] = space_to_json(*fs.topology);
        emit(out, output);
        return 0;
      }
      if (function_space_check) {
        Json out;
        out["identification"] = function_space_matches_dual(space, col);
        emit(out, output);
        return out["identification"].get<bool>() ? 0 : 1;
      }
      if (meet_continuity) {
        Json out;
        out["jointly_continuous"] = meet_jointly_continuous(col);
        emit(out, output);
        return 0;
      }
      const HyperTopology ht = generate_topology(col);
      if (!compare_with.empty()) {
        const HyperTopology other =
            generate_topology(builtin_collection(compare_with, space, bound));
        const ComparisonResult cmp = compare_hyper(ht, other);
        emit(comparison_to_json(cmp, *ht.topology), output);
        return cmp.order == TopologyOrder::equal ? 0 : 1;
      }
      emit(space_to_json(*ht.topology), output);
      return 0;
    }

    if (measure->parsed()) {
      const Json j = read_json(input);
      const PointMeasure mu = measure_from_json(j);
      const FiniteSpace& s = *mu.space();
      if (verify_join->parsed()) {
        const PointMask u = point_set_from_json(s, Json::parse(set_arg));
        const auto rep = verify_selfjoin(mu, u, parse_rational(r_arg));
        Json out;
        out["pass"] = rep.pass;
        out["m"] = rational_to_string(rep.midpoint);
        out["violation"] = rep.violation
                               ? Json::array({point_set_to_json(s, rep.violation->first),
                                              point_set_to_json(s, rep.violation->second)})
                               : Json(nullptr);
        emit(out, output);
        return rep.pass ? 0 : 1;
      }
      if (verify_split->parsed()) {
        const PointMask u1 = point_set_from_json(s, Json::parse(set_arg));
        const PointMask u2 = point_set_from_json(s, Json::parse(set2_arg));
        const auto rep = verify_selfsplit(mu, u1, u2, parse_rational(r_arg));
        Json out;
        out["pass"] = rep.pass;
        out["d"] = rational_to_string(rep.slack);
        out["m1"] = rational_to_string(rep.m1);
        out["m2"] = rational_to_string(rep.m2);
        out["violation"] =
            rep.violation ? point_set_to_json(s, *rep.violation) : Json(nullptr);
        emit(out, output);
        return rep.pass ? 0 : 1;
      }
      // gamma
      const FamilyCollection col = measure_level_collection(mu);
      const bool hsj = is_self_joinable(col, /*hereditary=*/true);
      const bool ssp = is_self_splittable(col);
      Json out = collection_to_json(col);
      Json p;
      p["hereditarily_self_joinable"] = hsj;
      p["self_splittable"] = ssp;
      p["sectionable"] = is_sectionable(col);
      out["predicates"] = std::move(p);
      emit(out, output);
      return hsj && ssp ? 0 : 1;
    }

    if (search_cmd->parsed()) {
      SearchSpec spec;
      if (!spec_path.empty()) {
        spec = search_spec_from_json(read_json(spec_path));
      } else {
        if (expr.empty()) throw TopoError(errc::bad_input, "--expr or --spec is required");
        spec.expression = expr;
        if (exhaustive_n > 0) {
          spec.space_gen = SearchSpec::SpaceGen::exhaustive;
          spec.n = exhaustive_n;
        } else if (!random_arg.empty()) {
          int n = 4, count = 50;
          unsigned long long seed0 = 0;
          if (std::sscanf(random_arg.c_str(), "%d:%llu:%d", &n, &seed0, &count) < 1)
            throw TopoError(errc::bad_input, "--random expects n:seed:count");
          spec.space_gen = SearchSpec::SpaceGen::random;
          spec.n = n;
          spec.space_seed = seed0;
          spec.space_count = count;
        }
        if (col_gen_name == "none") spec.col_gen = SearchSpec::CollectionGen::none;
        else if (col_gen_name == "builtins") spec.col_gen = SearchSpec::CollectionGen::builtins;
        else if (col_gen_name == "exhaustive")
          spec.col_gen = SearchSpec::CollectionGen::exhaustive;
        else if (col_gen_name == "sample") spec.col_gen = SearchSpec::CollectionGen::sample;
        else throw TopoError(errc::bad_input, "unknown collection generator");
        spec.lattice_bound = bound;
      }
      const SearchResult result = search(spec);
      emit(search_result_to_json(spec, result), output);
      return result.hits.empty() ? 0 : 1;
    }

    if (dot->parsed()) {
      const Json j = read_json(input);
      const SpacePtr space = resolve_space(j.contains("space") ? j.at("space") : j);
      std::string text;
      if (mode == "lattice") text = export_dot_lattice(*space);
      else if (mode == "hyper")
        text = export_dot_hyper(generate_topology(builtin_collection(collection_name, space, bound)));
      else if (mode == "inclusion-diagram") text = export_dot_inclusion_diagram(space, bound);
      else throw TopoError(errc::bad_input, "unknown mode '" + mode + "'");
      if (output.empty() || output == "-") std::cout << text;
      else std::ofstream(output) << text;
      return 0;
    }
  } catch (const TopoError& e) {
    emit(error_json(e), output);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    Json j;
    j["error"] = Json::object({{"code", "BadInput"}, {"message", e.what()}});
    emit(j, output);
    return 2;
  }
  return 2;
}
