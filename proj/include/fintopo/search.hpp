#pragma once

#include <json.hpp>

#include "fintopo/collection.hpp"

namespace fintopo {

/// Counterexample search over generated instances. An instance is a space
/// together with (optionally) a collection of families over it. The
/// expression is a boolean combination of registered predicate names:
///
///   space level: regular, prime, consonant, infraconsonant,
///                compactly_splittable, inclusions_ok
///   collection level (need a collection generator): self_joinable,
///                hereditarily_self_joinable, hereditary, sectionable,
///                self_splittable, self_splittable_strict,
///                intersection_closed
///   collection-valued names usable in == / != comparisons:
///                alpha (the instance), kappa, k, p, lambda, lambda_down,
///                sigma
///
/// Grammar: or-expr := and-expr ('|' and-expr)*;
///          and-expr := atom ('&' atom)*;
///          atom := '!' atom | '(' or-expr ')' | name (('=='|'!=') name)?
struct SearchSpec {
  std::string expression;

  enum class SpaceGen { exhaustive, random };
  SpaceGen space_gen = SpaceGen::exhaustive;
  int n = 3;
  std::uint64_t space_seed = 1;
  int space_count = 50;  // random mode

  enum class CollectionGen { none, builtins, exhaustive, sample };
  CollectionGen col_gen = CollectionGen::none;
  int col_samples = 256;
  std::uint64_t col_seed = 7;

  int lattice_bound = kDefaultLatticeBound;
  std::uint64_t max_instances = 1000000;
  int max_hits = 1000;
  long long wall_ms = 0;  // 0 = unlimited (wall clock budgets cut nondeterministically)
};

struct SearchHit {
  int space_index = 0;
  std::uint64_t space_seed = 0;
  bool seeded = false;
  nlohmann::ordered_json space;
  nlohmann::ordered_json collection;  // null when no collection generator
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::uint64_t instances_scanned = 0;
  bool budget_exhausted = false;
};

SearchSpec search_spec_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json search_result_to_json(const SearchSpec& spec, const SearchResult& r);

/// Returns all instances where the expression evaluates to true, in
/// generation order, together with reproduction data. Throws bad_input for
/// unknown names or when the expression needs a collection but the spec has
/// no collection generator.
SearchResult search(const SearchSpec& spec);

}  // namespace fintopo
