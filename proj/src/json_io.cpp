#include "fintopo/json_io.hpp"

#include <fstream>
#include <map>

namespace fintopo {
namespace {

std::map<std::string, int> point_index(const Json& points) {
  std::map<std::string, int> idx;
  int i = 0;
  for (const auto& p : points) {
    if (!p.is_string()) throw TopoError(errc::bad_input, "point names must be strings");
    if (!idx.emplace(p.get<std::string>(), i++).second)
      throw TopoError(errc::bad_input, "duplicate point name '" + p.get<std::string>() + "'");
  }
  return idx;
}

PointMask mask_from_names(const std::map<std::string, int>& idx, const Json& arr) {
  if (!arr.is_array()) throw TopoError(errc::bad_input, "point set must be an array");
  PointMask m = 0;
  for (const auto& p : arr) {
    auto it = idx.find(p.get<std::string>());
    if (it == idx.end())
      throw TopoError(errc::bad_input, "unknown point '" + p.get<std::string>() + "'");
    m |= PointMask{1} << it->second;
  }
  return m;
}

}  // namespace

SpacePtr space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points"))
    throw TopoError(errc::bad_input, "space object needs a 'points' array");
  const auto idx = point_index(j.at("points"));
  const int n = static_cast<int>(idx.size());
  std::vector<std::string> names;
  for (const auto& p : j.at("points")) names.push_back(p.get<std::string>());
  const bool has_opens = j.contains("opens"), has_pre = j.contains("preorder");
  if (has_opens == has_pre)
    throw TopoError(errc::bad_input, "exactly one of 'opens'/'preorder' is required");
  if (has_opens) {
    std::vector<PointMask> opens;
    for (const auto& o : j.at("opens")) opens.push_back(mask_from_names(idx, o));
    return make_space(n, std::move(opens), std::move(names));
  }
  Preorder p;
  p.n = n;
  p.up.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) p.up[static_cast<size_t>(i)] |= PointMask{1} << i;
  for (const auto& pair : j.at("preorder")) {
    if (!pair.is_array() || pair.size() != 2)
      throw TopoError(errc::bad_input, "preorder entries must be [x, y] pairs");
    const PointMask a = mask_from_names(idx, Json::array({pair.at(0)}));
    const PointMask b = mask_from_names(idx, Json::array({pair.at(1)}));
    p.up[static_cast<size_t>(std::countr_zero(a))] |= b;
  }
  return alexandrov_from_preorder(p, std::move(names));
}

Json space_to_json(const FiniteSpace& s) {
  Json j;
  Json points = Json::array();
  for (int p = 0; p < s.point_count(); ++p) points.push_back(s.point_name(p));
  j["points"] = std::move(points);
  Json opens = Json::array();
  for (PointMask u : s.opens()) opens.push_back(point_set_to_json(s, u));
  j["opens"] = std::move(opens);
  return j;
}

SpacePtr resolve_space(const Json& ref) {
  if (ref.is_string()) {
    std::ifstream in(ref.get<std::string>());
    if (!in) throw TopoError(errc::bad_input, "cannot open '" + ref.get<std::string>() + "'");
    Json j;
    in >> j;
    return space_from_json(j);
  }
  return space_from_json(ref);
}

Json point_set_to_json(const FiniteSpace& s, PointMask m) {
  Json arr = Json::array();
  for (int p = 0; p < s.point_count(); ++p)
    if (m >> p & 1) arr.push_back(s.point_name(p));
  return arr;
}

PointMask point_set_from_json(const FiniteSpace& s, const Json& j) {
  std::map<std::string, int> idx;
  for (int p = 0; p < s.point_count(); ++p) idx.emplace(s.point_name(p), p);
  return mask_from_names(idx, j);
}

OpenFamily family_from_json(const Json& j, SpacePtr space) {
  if (!j.is_object()) throw TopoError(errc::bad_input, "family must be an object");
  if (!space) {
    if (!j.contains("space"))
      throw TopoError(errc::bad_input, "family needs a 'space' field");
    space = resolve_space(j.at("space"));
  }
  if (!j.contains("generators"))
    throw TopoError(errc::bad_input, "family needs a 'generators' array");
  std::vector<PointMask> seeds;
  for (const auto& g : j.at("generators")) seeds.push_back(point_set_from_json(*space, g));
  return isotone_hull(space, std::span<const PointMask>(seeds));
}

Json family_to_json(const OpenFamily& f, bool include_space) {
  Json j;
  if (include_space) j["space"] = space_to_json(*f.space());
  Json gens = Json::array();
  for (PointMask m : f.minimal_sets()) gens.push_back(point_set_to_json(*f.space(), m));
  j["generators"] = std::move(gens);
  return j;
}

FamilyCollection builtin_collection(const std::string& name, SpacePtr space, int bound) {
  if (name == "kappa") return all_compact_families(std::move(space), bound);
  if (name == "k") return compactly_generated_collection(std::move(space));
  if (name == "p") return finitely_generated_collection(std::move(space));
  if (name == "lambda") return largest_self_joinable(std::move(space), bound);
  if (name == "lambda_down")
    return largest_hereditarily_self_joinable(std::move(space), bound);
  if (name == "sigma") return largest_self_splittable(std::move(space), bound);
  throw TopoError(errc::bad_input, "unknown builtin collection '" + name + "'");
}

FamilyCollection collection_from_json(const Json& j, SpacePtr space, int bound) {
  if (!j.is_object()) throw TopoError(errc::bad_input, "collection must be an object");
  if (!space) {
    if (!j.contains("space"))
      throw TopoError(errc::bad_input, "collection needs a 'space' field");
    space = resolve_space(j.at("space"));
  }
  if (j.contains("builtin")) return builtin_collection(j.at("builtin").get<std::string>(), space, bound);
  if (!j.contains("families"))
    throw TopoError(errc::bad_input, "collection needs 'families' or 'builtin'");
  std::vector<FamilyMask> fams;
  for (const auto& fj : j.at("families"))
    fams.push_back(family_from_json(fj, space).members());
  return FamilyCollection::of(std::move(space), std::move(fams));
}

Json collection_to_json(const FamilyCollection& col, bool include_space) {
  Json j;
  if (include_space) j["space"] = space_to_json(*col.space());
  Json fams = Json::array();
  for (int i = 0; i < col.size(); ++i)
    fams.push_back(family_to_json(col.family_at(i), /*include_space=*/false));
  j["families"] = std::move(fams);
  return j;
}

PointMeasure measure_from_json(const Json& j, SpacePtr space) {
  if (!j.is_object() || !j.contains("weights"))
    throw TopoError(errc::bad_input, "measure needs a 'weights' object");
  if (!space) {
    if (!j.contains("space"))
      throw TopoError(errc::bad_input, "measure needs a 'space' field");
    space = resolve_space(j.at("space"));
  }
  std::vector<Rational> weights(static_cast<size_t>(space->point_count()), Rational(0));
  for (const auto& [key, val] : j.at("weights").items()) {
    int p = -1;
    for (int q = 0; q < space->point_count(); ++q)
      if (space->point_name(q) == key) p = q;
    if (p < 0) throw TopoError(errc::bad_input, "unknown point '" + key + "' in weights");
    weights[static_cast<size_t>(p)] =
        val.is_string() ? parse_rational(val.get<std::string>()) : Rational(val.get<long long>());
  }
  return PointMeasure(std::move(space), std::move(weights));
}

Json measure_to_json(const PointMeasure& mu) {
  Json j;
  j["space"] = space_to_json(*mu.space());
  Json w = Json::object();
  for (int p = 0; p < mu.space()->point_count(); ++p)
    w[mu.space()->point_name(p)] = rational_to_string(mu.weights()[static_cast<size_t>(p)]);
  j["weights"] = std::move(w);
  return j;
}

Json comparison_to_json(const ComparisonResult& r, const FiniteSpace& carrier_of) {
  Json j;
  switch (r.order) {
    case TopologyOrder::equal: j["comparison"] = "equal"; break;
    case TopologyOrder::coarser: j["comparison"] = "coarser"; break;
    case TopologyOrder::finer: j["comparison"] = "finer"; break;
    case TopologyOrder::incomparable: j["comparison"] = "incomparable"; break;
  }
  if (!r.only_in_first && !r.only_in_second) {
    j["witness"] = nullptr;
  } else {
    Json w = Json::object();
    if (r.only_in_first)
      w["only_in_first"] = point_set_to_json(carrier_of, *r.only_in_first);
    if (r.only_in_second)
      w["only_in_second"] = point_set_to_json(carrier_of, *r.only_in_second);
    j["witness"] = std::move(w);
  }
  return j;
}

Json report_to_json(const SpaceReport& r) {
  Json j;
  j["consonant"] = r.consonant;
  j["infraconsonant"] = r.infraconsonant;
  j["compactly_splittable"] = r.compactly_splittable;
  j["inclusions_ok"] = r.inclusions_ok;
  j["open_count"] = r.open_count;
  Json sizes = Json::object();
  sizes["kappa"] = r.kappa_size;
  sizes["k"] = r.k_size;
  sizes["lambda"] = r.lambda_size;
  sizes["lambda_down"] = r.lambda_down_size;
  sizes["sigma"] = r.sigma_size;
  j["collection_sizes"] = std::move(sizes);
  return j;
}

}  // namespace fintopo
