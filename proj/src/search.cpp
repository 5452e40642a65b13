#include "fintopo/search.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "fintopo/enumerate.hpp"
#include "fintopo/hyperspace.hpp"
#include "fintopo/json_io.hpp"

namespace fintopo {
namespace {

using Json = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// Expression AST

struct Node {
  enum class Kind { name, cmp, neg, conj, disj } kind;
  std::string a, b;   // names for name/cmp
  bool equal = true;  // cmp: == vs !=
  std::unique_ptr<Node> lhs, rhs;
};

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat2(const char* s) {
    skip();
    if (pos + 1 < text.size() && text[pos] == s[0] && text[pos + 1] == s[1]) {
      pos += 2;
      return true;
    }
    return false;
  }
  std::string name() {
    skip();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) throw TopoError(errc::bad_input, "expected a name in expression");
    return text.substr(start, pos - start);
  }

  std::unique_ptr<Node> parse() {
    auto n = or_expr();
    skip();
    if (pos != text.size())
      throw TopoError(errc::bad_input, "trailing characters in expression");
    return n;
  }
  std::unique_ptr<Node> or_expr() {
    auto n = and_expr();
    while (eat('|')) {
      auto r = std::make_unique<Node>();
      r->kind = Node::Kind::disj;
      r->lhs = std::move(n);
      r->rhs = and_expr();
      n = std::move(r);
    }
    return n;
  }
  std::unique_ptr<Node> and_expr() {
    auto n = atom();
    while (eat('&')) {
      auto r = std::make_unique<Node>();
      r->kind = Node::Kind::conj;
      r->lhs = std::move(n);
      r->rhs = atom();
      n = std::move(r);
    }
    return n;
  }
  std::unique_ptr<Node> atom() {
    if (eat('!')) {
      auto r = std::make_unique<Node>();
      r->kind = Node::Kind::neg;
      r->lhs = atom();
      return r;
    }
    if (eat('(')) {
      auto n = or_expr();
      if (!eat(')')) throw TopoError(errc::bad_input, "missing ')' in expression");
      return n;
    }
    auto r = std::make_unique<Node>();
    r->a = name();
    if (eat2("==")) {
      r->kind = Node::Kind::cmp;
      r->equal = true;
      r->b = name();
    } else if (eat2("!=")) {
      r->kind = Node::Kind::cmp;
      r->equal = false;
      r->b = name();
    } else {
      r->kind = Node::Kind::name;
    }
    return r;
  }
};

const char* kSpacePreds[] = {"regular",          "prime",
                             "consonant",        "infraconsonant",
                             "compactly_splittable", "inclusions_ok"};
const char* kColPreds[] = {"self_joinable",          "hereditarily_self_joinable",
                           "hereditary",             "sectionable",
                           "self_splittable",        "self_splittable_strict",
                           "intersection_closed"};
const char* kColValued[] = {"alpha", "kappa", "k", "p", "lambda", "lambda_down", "sigma"};

bool is_in(const std::string& s, const char* const* arr, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (s == arr[i]) return true;
  return false;
}

void collect_names(const Node& n, std::vector<std::pair<std::string, bool>>& out) {
  switch (n.kind) {
    case Node::Kind::name: out.emplace_back(n.a, false); break;
    case Node::Kind::cmp:
      out.emplace_back(n.a, true);
      out.emplace_back(n.b, true);
      break;
    default:
      if (n.lhs) collect_names(*n.lhs, out);
      if (n.rhs) collect_names(*n.rhs, out);
  }
}

// Lazily computed per-instance values.
struct EvalContext {
  SpacePtr space;
  const FamilyCollection* alpha = nullptr;  // instance collection, may be null
  int bound;

  std::optional<SpaceReport> report_;
  std::map<std::string, FamilyCollection> collections_;

  const SpaceReport& report() {
    if (!report_) report_ = classify_space(space, bound);
    return *report_;
  }
  const FamilyCollection& named(const std::string& name) {
    if (name == "alpha") {
      if (!alpha)
        throw TopoError(errc::bad_input, "'alpha' needs a collection generator");
      return *alpha;
    }
    auto it = collections_.find(name);
    if (it == collections_.end())
      it = collections_.emplace(name, builtin_collection(name, space, bound)).first;
    return it->second;
  }

  bool predicate(const std::string& name) {
    if (name == "regular") return space->is_regular();
    if (name == "prime") return space->is_prime();
    if (name == "consonant") return report().consonant;
    if (name == "infraconsonant") return report().infraconsonant;
    if (name == "compactly_splittable") return report().compactly_splittable;
    if (name == "inclusions_ok") return report().inclusions_ok;
    if (!alpha)
      throw TopoError(errc::bad_input,
                      "predicate '" + name + "' needs a collection generator");
    const FamilyCollection& a = *alpha;
    if (name == "self_joinable") return is_self_joinable(a);
    if (name == "hereditarily_self_joinable") return is_self_joinable(a, true);
    if (name == "hereditary") return is_hereditary(a);
    if (name == "sectionable") return is_sectionable(a);
    if (name == "self_splittable") return is_self_splittable(a);
    if (name == "self_splittable_strict")
      return is_self_splittable(a, SplitMode::strict);
    if (name == "intersection_closed") return is_intersection_closed(a);
    throw TopoError(errc::bad_input, "unknown predicate '" + name + "'");
  }

  bool eval(const Node& n) {
    switch (n.kind) {
      case Node::Kind::name: return predicate(n.a);
      case Node::Kind::cmp: return (named(n.a) == named(n.b)) == n.equal;
      case Node::Kind::neg: return !eval(*n.lhs);
      case Node::Kind::conj: return eval(*n.lhs) && eval(*n.rhs);
      case Node::Kind::disj: return eval(*n.lhs) || eval(*n.rhs);
    }
    return false;
  }
};

long long now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

SearchSpec search_spec_from_json(const Json& j) {
  SearchSpec spec;
  spec.expression = j.at("expression").get<std::string>();
  if (j.contains("spaces")) {
    const Json& s = j.at("spaces");
    const std::string mode = s.value("mode", "exhaustive");
    if (mode == "exhaustive") spec.space_gen = SearchSpec::SpaceGen::exhaustive;
    else if (mode == "random") spec.space_gen = SearchSpec::SpaceGen::random;
    else throw TopoError(errc::bad_input, "unknown space generator '" + mode + "'");
    spec.n = s.value("n", spec.n);
    spec.space_seed = s.value("seed", spec.space_seed);
    spec.space_count = s.value("count", spec.space_count);
  }
  if (j.contains("collections")) {
    const Json& c = j.at("collections");
    const std::string mode = c.value("mode", "none");
    if (mode == "none") spec.col_gen = SearchSpec::CollectionGen::none;
    else if (mode == "builtins") spec.col_gen = SearchSpec::CollectionGen::builtins;
    else if (mode == "exhaustive") spec.col_gen = SearchSpec::CollectionGen::exhaustive;
    else if (mode == "sample") spec.col_gen = SearchSpec::CollectionGen::sample;
    else throw TopoError(errc::bad_input, "unknown collection generator '" + mode + "'");
    spec.col_samples = c.value("samples", spec.col_samples);
    spec.col_seed = c.value("seed", spec.col_seed);
  }
  if (j.contains("budget")) {
    const Json& b = j.at("budget");
    spec.max_instances = b.value("instances", spec.max_instances);
    spec.max_hits = b.value("hits", spec.max_hits);
    spec.wall_ms = b.value("wall_ms", spec.wall_ms);
  }
  spec.lattice_bound = j.value("lattice_bound", spec.lattice_bound);
  return spec;
}

Json search_result_to_json(const SearchSpec& spec, const SearchResult& r) {
  Json j;
  j["expression"] = spec.expression;
  j["instances_scanned"] = r.instances_scanned;
  j["budget_exhausted"] = r.budget_exhausted;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json hj;
    hj["space_index"] = h.space_index;
    if (h.seeded) hj["seed"] = h.space_seed;
    hj["space"] = h.space;
    hj["collection"] = h.collection;
    hits.push_back(std::move(hj));
  }
  j["hits"] = std::move(hits);
  return j;
}

SearchResult search(const SearchSpec& spec) {
  Parser parser(spec.expression);
  const auto ast = parser.parse();

  std::vector<std::pair<std::string, bool>> names;
  collect_names(*ast, names);
  bool needs_collection = false;
  for (const auto& [name, in_cmp] : names) {
    if (in_cmp) {
      if (!is_in(name, kColValued, std::size(kColValued)))
        throw TopoError(errc::bad_input, "unknown collection name '" + name + "'");
      if (name == "alpha") needs_collection = true;
    } else {
      const bool sp = is_in(name, kSpacePreds, std::size(kSpacePreds));
      const bool cp = is_in(name, kColPreds, std::size(kColPreds));
      if (!sp && !cp) throw TopoError(errc::bad_input, "unknown predicate '" + name + "'");
      if (cp) needs_collection = true;
    }
  }
  if (needs_collection && spec.col_gen == SearchSpec::CollectionGen::none)
    throw TopoError(errc::bad_input,
                    "expression uses collection predicates but no collection generator is set");

  std::vector<SpacePtr> spaces;
  std::vector<std::uint64_t> seeds;
  if (spec.space_gen == SearchSpec::SpaceGen::exhaustive) {
    spaces = enumerate_spaces(spec.n);
  } else {
    for (int i = 0; i < spec.space_count; ++i) {
      seeds.push_back(spec.space_seed + static_cast<std::uint64_t>(i));
      spaces.push_back(random_space(spec.n, seeds.back()));
    }
  }

  SearchResult result;
  const long long t0 = now_ms();
  auto out_of_budget = [&]() {
    if (result.instances_scanned >= spec.max_instances) return true;
    if (static_cast<int>(result.hits.size()) >= spec.max_hits) return true;
    if (spec.wall_ms > 0 && now_ms() - t0 > spec.wall_ms) return true;
    return false;
  };

  for (size_t si = 0; si < spaces.size(); ++si) {
    const SpacePtr& space = spaces[si];
    auto consider = [&](const FamilyCollection* alpha, const Json& col_json) {
      if (out_of_budget()) {
        result.budget_exhausted = true;
        return false;
      }
      ++result.instances_scanned;
      EvalContext ctx;
      ctx.space = space;
      ctx.alpha = alpha;
      ctx.bound = spec.lattice_bound;
      if (ctx.eval(*ast)) {
        SearchHit hit;
        hit.space_index = static_cast<int>(si);
        hit.seeded = spec.space_gen == SearchSpec::SpaceGen::random;
        if (hit.seeded) hit.space_seed = seeds[si];
        hit.space = space_to_json(*space);
        hit.collection = col_json;
        result.hits.push_back(std::move(hit));
      }
      return true;
    };

    if (spec.col_gen == SearchSpec::CollectionGen::none) {
      if (!consider(nullptr, nullptr)) break;
      continue;
    }
    if (spec.col_gen == SearchSpec::CollectionGen::builtins) {
      bool go = true;
      for (const char* name : {"kappa", "k", "p", "lambda", "lambda_down", "sigma"}) {
        const FamilyCollection col = builtin_collection(name, space, spec.lattice_bound);
        Json cj = Json::object({{"builtin", name}});
        if (!(go = consider(&col, cj))) break;
      }
      if (!go) break;
      continue;
    }
    // exhaustive / sampled subcollections of kappa
    FamilyCollection kappa = all_compact_families(space, spec.lattice_bound);
    const int count = kappa.size();
    auto sub_at = [&](std::uint64_t mask) {
      std::vector<FamilyMask> fams;
      for (int i = 0; i < count; ++i)
        if (mask >> i & 1) fams.push_back(kappa.families()[static_cast<size_t>(i)]);
      return FamilyCollection::of(kappa.space(), std::move(fams));
    };
    auto col_json = [&](const FamilyCollection& col) {
      Json j = collection_to_json(col, /*include_space=*/false);
      return j;
    };
    bool go = true;
    if (spec.col_gen == SearchSpec::CollectionGen::exhaustive) {
      if (count > 20)
        throw TopoError(errc::lattice_too_large,
                        "exhaustive subcollection scan capped at 20 families");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
        const FamilyCollection col = sub_at(mask);
        if (!(go = consider(&col, col_json(col)))) break;
      }
    } else {
      if (count > 64)
        throw TopoError(errc::lattice_too_large, "sampled subcollection scan capped at 64");
      std::mt19937_64 rng(spec.col_seed);
      for (int i = 0; i < spec.col_samples; ++i) {
        const FamilyCollection col = sub_at(rng() & full_mask(count));
        if (!(go = consider(&col, col_json(col)))) break;
      }
    }
    if (!go) break;
  }
  return result;
}

}  // namespace fintopo
