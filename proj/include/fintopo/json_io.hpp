#pragma once

#include <json.hpp>

#include "fintopo/hyperspace.hpp"
#include "fintopo/measure.hpp"

namespace fintopo {

using Json = nlohmann::ordered_json;

/// Space format: {"points": ["a","b"], "opens": [[], ["a"], ["a","b"]]}
/// or {"points": [...], "preorder": [["a","b"], ...]} — pairs x <= y,
/// reflexivity implied, opens are the up-closed sets. Exactly one of
/// "opens" / "preorder" is required.
SpacePtr space_from_json(const Json& j);
Json space_to_json(const FiniteSpace& s);

/// When a "space" field holds a string it is read as a path to a space file.
SpacePtr resolve_space(const Json& ref);

/// Family format: {"space": <inline or path>, "generators": [["a"], ["b"]]},
/// meaning the isotone hull of the listed point sets. Serialization emits
/// the minimal antichain as the generators.
OpenFamily family_from_json(const Json& j, SpacePtr space = nullptr);
Json family_to_json(const OpenFamily& f, bool include_space = true);

/// Collection format: {"space": ..., "families": [<family>...]} or
/// {"space": ..., "builtin": "kappa"|"k"|"p"|"lambda"|"lambda_down"|"sigma"}.
FamilyCollection collection_from_json(const Json& j, SpacePtr space = nullptr,
                                      int bound = kDefaultLatticeBound);
FamilyCollection builtin_collection(const std::string& name, SpacePtr space,
                                    int bound = kDefaultLatticeBound);
Json collection_to_json(const FamilyCollection& col, bool include_space = true);

/// Measure format: {"space": ..., "weights": {"a": "1", "b": "2/3"}} with
/// rationals as integers or "p/q" strings.
PointMeasure measure_from_json(const Json& j, SpacePtr space = nullptr);
Json measure_to_json(const PointMeasure& mu);

Json point_set_to_json(const FiniteSpace& s, PointMask m);
PointMask point_set_from_json(const FiniteSpace& s, const Json& j);

Json comparison_to_json(const ComparisonResult& r, const FiniteSpace& carrier_of);
Json report_to_json(const SpaceReport& r);

}  // namespace fintopo
