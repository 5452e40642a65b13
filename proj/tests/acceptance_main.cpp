// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fintopo/battery.hpp"
#include "fintopo/enumerate.hpp"
#include "fintopo/hyperspace.hpp"
#include "fintopo/json_io.hpp"
#include "fintopo/measure.hpp"

using namespace fintopo;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
  double time_target_s = 0;  // 0 = no target
};

std::vector<SpacePtr> all_small_spaces() {
  std::vector<SpacePtr> out;
  for (int n = 1; n <= 3; ++n)
    for (SpacePtr& s : enumerate_spaces(n)) out.push_back(std::move(s));
  return out;
}

std::vector<SpacePtr> random_n4(int count) {
  std::vector<SpacePtr> out;
  for (int i = 0; i < count; ++i) out.push_back(random_space(4, static_cast<std::uint64_t>(i)));
  return out;
}

// ---------------------------------------------------------------------------
// Independent subcollection oracle: evaluates the "self" predicates for one
// subcollection at a time straight from the definitions, with bitset tables
// over the kappa index. Used to brute-force the maxima that the fixed-point
// computation must match.
struct SubOracle {
  const FiniteSpace* s;
  std::vector<FamilyMask> members;
  int count;
  std::vector<FamilyMask> meets;                       // pairwise meets of minimal members
  std::vector<std::vector<std::uint32_t>> member_wits; // [f][open]: g's with open∈g, meets[g]⊆f
  std::vector<std::uint32_t> join_wits;                // [f]: g's with meets[g] ⊆ f
  std::vector<std::uint64_t> hered_req, sect_req;      // required kappa indices
  // splittable witness rows: for f, for each admissible pair, row per g1
  // (index count = padded witness) of admissible g2 bitsets.
  struct PairRows {
    int f;
    std::vector<std::uint32_t> rows;  // size count+1
  };
  std::vector<std::vector<PairRows>> split_rows;  // [f] -> pairs

  explicit SubOracle(const FamilyCollection& kappa) {
    s = kappa.space().get();
    members = kappa.families();
    count = static_cast<int>(members.size());
    const int m = s->open_count();
    auto kappa_index = [&](FamilyMask f) {
      return static_cast<int>(std::lower_bound(members.begin(), members.end(), f) -
                              members.begin());
    };
    std::vector<std::vector<char>> fixed(static_cast<size_t>(count),
                                         std::vector<char>(static_cast<size_t>(m), 0));
    for (int fi = 0; fi < count; ++fi) {
      const OpenFamily fam = kappa.family_at(fi);
      FamilyMask meet = 0;
      for (PointMask a : fam.minimal_sets())
        for (PointMask b : fam.minimal_sets())
          meet |= FamilyMask{1} << s->open_index(a & b);
      meets.push_back(meet);
      std::uint64_t hr = 0;
      for (PointMask a : fam.member_sets())
        hr |= std::uint64_t{1} << kappa_index(restrict_to(fam, a).members());
      hered_req.push_back(hr);
      std::uint64_t sr = 0;
      for (PointMask u : s->opens()) {
        const PointMask c = s->points() & ~u;
        if (in_grill(fam, c))
          sr |= std::uint64_t{1} << kappa_index(section_by(fam, c).members());
      }
      sect_req.push_back(sr);
      for (int u = 0; u < m; ++u)
        fixed[static_cast<size_t>(fi)][static_cast<size_t>(u)] =
            restrict_to(fam, s->open_at(u)).members() == fam.members();
    }
    for (int fi = 0; fi < count; ++fi) {
      std::uint32_t jw = 0;
      for (int g = 0; g < count; ++g)
        if (subset_of(meets[static_cast<size_t>(g)], members[static_cast<size_t>(fi)]))
          jw |= std::uint32_t{1} << g;
      join_wits.push_back(jw);
      std::vector<std::uint32_t> mw(static_cast<size_t>(m), 0);
      for (int a = 0; a < m; ++a)
        for (int g = 0; g < count; ++g)
          if ((members[static_cast<size_t>(g)] >> a & 1) &&
              subset_of(meets[static_cast<size_t>(g)], members[static_cast<size_t>(fi)]))
            mw[static_cast<size_t>(a)] |= std::uint32_t{1} << g;
      member_wits.push_back(std::move(mw));
    }
    const FamilyMask all_opens = full_mask(m);
    split_rows.resize(static_cast<size_t>(count));
    for (int fi = 0; fi < count; ++fi) {
      for (int u1 = 0; u1 < m; ++u1) {
        for (int u2 = u1; u2 < m; ++u2) {
          const int w = s->open_index(s->open_at(u1) | s->open_at(u2));
          if (!(members[static_cast<size_t>(fi)] >> w & 1)) continue;
          PairRows pr;
          pr.f = fi;
          pr.rows.assign(static_cast<size_t>(count) + 1, 0);
          auto g2_bits = [&](FamilyMask g1m) {
            std::uint32_t bits = 0;
            for (int g2 = 0; g2 <= count; ++g2) {
              const FamilyMask g2m = g2 == count ? all_opens : members[static_cast<size_t>(g2)];
              if (g2 < count && !fixed[static_cast<size_t>(g2)][static_cast<size_t>(u2)])
                continue;
              if (subset_of(g1m & g2m, members[static_cast<size_t>(fi)]))
                bits |= std::uint32_t{1} << g2;
            }
            return bits;
          };
          for (int g1 = 0; g1 <= count; ++g1) {
            if (g1 < count && !fixed[static_cast<size_t>(g1)][static_cast<size_t>(u1)]) continue;
            pr.rows[static_cast<size_t>(g1)] =
                g2_bits(g1 == count ? all_opens : members[static_cast<size_t>(g1)]);
          }
          split_rows[static_cast<size_t>(fi)].push_back(std::move(pr));
        }
      }
    }
  }

  bool self_joinable(std::uint32_t phi) const {
    for (int f = 0; f < count; ++f)
      if ((phi >> f & 1) && (join_wits[static_cast<size_t>(f)] & phi) == 0) return false;
    return true;
  }
  bool hereditarily_self_joinable(std::uint32_t phi) const {
    for (int f = 0; f < count; ++f) {
      if (!(phi >> f & 1)) continue;
      const FamilyMask mem = members[static_cast<size_t>(f)];
      for (int a = 0; a < s->open_count(); ++a)
        if ((mem >> a & 1) &&
            (member_wits[static_cast<size_t>(f)][static_cast<size_t>(a)] & phi) == 0)
          return false;
    }
    return true;
  }
  bool hereditary(std::uint32_t phi) const {
    for (int f = 0; f < count; ++f)
      if ((phi >> f & 1) && !subset_of(hered_req[static_cast<size_t>(f)], std::uint64_t{phi}))
        return false;
    return true;
  }
  bool sectionable(std::uint32_t phi) const {
    for (int f = 0; f < count; ++f)
      if ((phi >> f & 1) && !subset_of(sect_req[static_cast<size_t>(f)], std::uint64_t{phi}))
        return false;
    return true;
  }
  bool self_splittable(std::uint32_t phi) const {
    const std::uint32_t pool = phi | (std::uint32_t{1} << count);  // padded witness
    for (int f = 0; f < count; ++f) {
      if (!(phi >> f & 1)) continue;
      for (const PairRows& pr : split_rows[static_cast<size_t>(f)]) {
        bool ok = false;
        for (int g1 = 0; g1 <= count && !ok; ++g1)
          if ((pool >> g1 & 1) && (pr.rows[static_cast<size_t>(g1)] & pool)) ok = true;
        if (!ok) return false;
      }
    }
    return true;
  }
  std::uint32_t mask_of(const FamilyCollection& col) const {
    std::uint32_t phi = 0;
    for (FamilyMask f : col.families()) {
      const auto it = std::lower_bound(members.begin(), members.end(), f);
      if (it != members.end() && *it == f)
        phi |= std::uint32_t{1} << (it - members.begin());
    }
    return phi;
  }
};

// ---------------------------------------------------------------------------

bool criterion_calculus(std::string& detail) {
  long long families = 0, restrictions = 0, sections = 0;
  for (const SpacePtr& sp : all_small_spaces()) {
    const FamilyCollection kappa = all_compact_families(sp);
    for (int i = 0; i < kappa.size(); ++i) {
      const OpenFamily f = kappa.family_at(i);
      ++families;
      for (PointMask u : sp->opens())
        if (f.contains(u) == in_grill(f, sp->points() & ~u)) {
          detail = "grill duality failed";
          return false;
        }
      for (PointMask a : f.member_sets()) {
        const OpenFamily r = restrict_to(f, a, /*strict=*/true);
        ++restrictions;
        if (!is_compact_family(r, CompactMode::oracle) ||
            !subset_of(r.members(), f.members()) || !r.contains(a)) {
          detail = "restriction failed on " + sp->set_to_string(a);
          return false;
        }
      }
      for (PointMask u : sp->opens()) {
        const PointMask c = sp->points() & ~u;
        if (!in_grill(f, c)) continue;
        ++sections;
        if (!is_compact_family(section_by(f, c), CompactMode::oracle)) {
          detail = "section failed on " + sp->set_to_string(c);
          return false;
        }
      }
    }
  }
  detail = std::to_string(families) + " families, " + std::to_string(restrictions) +
           " restrictions, " + std::to_string(sections) + " sections";
  return true;
}

bool criterion_consonance(std::string& detail) {
  int checked = 0;
  auto check = [&](const SpacePtr& sp, int bound) {
    const auto cmp = compare_hyper(generate_topology(compactly_generated_collection(sp)),
                                   generate_topology(all_compact_families(sp, bound)));
    ++checked;
    return cmp.order == TopologyOrder::equal;
  };
  for (const SpacePtr& sp : all_small_spaces())
    if (!check(sp, kDefaultLatticeBound)) {
      detail = "collapse failed on an enumerated space";
      return false;
    }
  for (const SpacePtr& sp : random_n4(50))
    if (!check(sp, 16)) {
      detail = "collapse failed on a random 4 point space";
      return false;
    }
  detail = std::to_string(checked) + " spaces";
  return true;
}

bool criterion_fixed_points(std::string& detail) {
  int braked = 0;
  auto run = [&](const SpacePtr& sp, int bound) {
    const FamilyCollection kappa = all_compact_families(sp, bound);
    if (kappa.size() > 16) return true;  // outside the stated brute-force range
    ++braked;
    const SubOracle oracle(kappa);
    std::uint32_t best_j = 0, best_h = 0, best_s = 0, best_jh = 0;
    for (std::uint32_t phi = 0; phi < (std::uint32_t{1} << oracle.count); ++phi) {
      const bool sj = oracle.self_joinable(phi);
      if (sj) best_j |= phi;
      if (oracle.hereditarily_self_joinable(phi)) best_h |= phi;
      if (oracle.self_splittable(phi)) best_s |= phi;
      // second characterization: self-joinable and hereditary at once
      if (sj && oracle.hereditary(phi)) best_jh |= phi;
    }
    const std::uint32_t lambda = oracle.mask_of(
        greatest_fixed_subcollection(kappa, FixedPointCondition::joinable));
    const std::uint32_t lambda_down = oracle.mask_of(
        greatest_fixed_subcollection(kappa, FixedPointCondition::hereditarily_joinable));
    const std::uint32_t sigma = oracle.mask_of(
        greatest_fixed_subcollection(kappa, FixedPointCondition::splittable));
    return best_j == lambda && best_h == lambda_down && best_s == sigma &&
           best_jh == lambda_down;
  };
  for (const SpacePtr& sp : all_small_spaces())
    if (!run(sp, kDefaultLatticeBound)) {
      detail = "fixed point mismatch on an enumerated space";
      return false;
    }
  for (const SpacePtr& sp : random_n4(50))
    if (!run(sp, 16)) {
      detail = "fixed point mismatch on a random space";
      return false;
    }
  detail = std::to_string(braked) + " spaces brute-forced";
  return true;
}

bool criterion_inclusions(std::string& detail) {
  int checked = 0;
  auto run = [&](const SpacePtr& sp, int bound) {
    const FamilyCollection kappa = all_compact_families(sp, bound);
    const FamilyCollection k = compactly_generated_collection(sp);
    const FamilyCollection lambda =
        greatest_fixed_subcollection(kappa, FixedPointCondition::joinable);
    const FamilyCollection lambda_down =
        greatest_fixed_subcollection(kappa, FixedPointCondition::hereditarily_joinable);
    const FamilyCollection sigma =
        greatest_fixed_subcollection(kappa, FixedPointCondition::splittable);
    ++checked;
    return k.subset_of_collection(lambda_down) && lambda_down.subset_of_collection(lambda) &&
           lambda.subset_of_collection(kappa) && lambda_down.subset_of_collection(sigma) &&
           sigma.subset_of_collection(kappa) && kappa == lambda && kappa == lambda_down &&
           kappa == sigma;
  };
  for (const SpacePtr& sp : all_small_spaces())
    if (!run(sp, kDefaultLatticeBound)) {
      detail = "inclusion chain failed on an enumerated space";
      return false;
    }
  for (const SpacePtr& sp : random_n4(50))
    if (!run(sp, 16)) {
      detail = "inclusion chain failed on a random space";
      return false;
    }
  detail = std::to_string(checked) + " spaces";
  return true;
}

bool criterion_regular_split(std::string& detail) {
  long long scanned = 0;
  for (const SpacePtr& sp : all_small_spaces()) {
    if (!sp->is_regular()) continue;
    const FamilyCollection kappa = all_compact_families(sp);
    const SubOracle oracle(kappa);
    auto check = [&](std::uint32_t phi) {
      ++scanned;
      if (oracle.self_joinable(phi) && oracle.hereditary(phi) && oracle.sectionable(phi))
        return oracle.self_splittable(phi);
      return true;
    };
    if (oracle.count <= 12) {
      for (std::uint32_t phi = 0; phi < (std::uint32_t{1} << oracle.count); ++phi)
        if (!check(phi)) {
          detail = "violation at subcollection " + std::to_string(phi);
          return false;
        }
    } else {
      std::mt19937_64 rng(4242);
      const std::uint32_t all = static_cast<std::uint32_t>(full_mask(oracle.count));
      for (int i = 0; i < 20000; ++i)
        if (!check(static_cast<std::uint32_t>(rng()) & all)) {
          detail = "violation at a sampled subcollection";
          return false;
        }
    }
  }
  detail = std::to_string(scanned) + " subcollections scanned";
  return true;
}

bool criterion_prime(std::string& detail) {
  int primes = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const SpacePtr& sp : enumerate_spaces(n)) {
      if (!sp->is_prime()) continue;
      ++primes;
      const FamilyCollection kappa = all_compact_families(sp, 16);
      for (int i = 0; i < kappa.size(); ++i)
        if (!is_splittable_rel(kappa.family_at(i), kappa)) {
          detail = "a prime space is not compactly splittable";
          return false;
        }
    }
  }
  detail = std::to_string(primes) + " prime spaces";
  return true;
}

bool criterion_meet_continuity(std::string& detail) {
  int checked = 0;
  auto run = [&](const SpacePtr& sp, int bound) {
    const FamilyCollection kappa = all_compact_families(sp, bound);
    ++checked;
    const bool cont = meet_jointly_continuous(kappa);
    return cont && cont == is_self_joinable(kappa);
  };
  for (const SpacePtr& sp : all_small_spaces())
    if (!run(sp, kDefaultLatticeBound)) {
      detail = "equivalence failed on an enumerated space";
      return false;
    }
  for (const SpacePtr& sp : random_n4(50))
    if (!run(sp, 16)) {
      detail = "equivalence failed on a random space";
      return false;
    }
  detail = std::to_string(checked) + " spaces";
  return true;
}

bool criterion_measure_lemma(std::string& detail) {
  const long long levels[] = {0, 1, 2, 4, 7};
  long long joins = 0, splits = 0, collections = 0;
  std::vector<SpacePtr> fixtures = {
      make_space(3, {0, 1, 2, 3, 4, 5, 6, 7}, {"a", "b", "c"}),
      make_space(4, {0, 3, 12, 15}, {"1", "2", "3", "4"}),
      make_space(3, {0, 2, 4, 6, 7}, {"p", "x", "y"}),
  };
  for (const SpacePtr& sp : fixtures) {
    const int n = sp->point_count();
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    while (true) {
      std::vector<Rational> ws;
      for (int i = 0; i < n; ++i) ws.emplace_back(levels[pick[static_cast<size_t>(i)]]);
      const PointMeasure mu(sp, ws);
      for (const Rational& r : representative_thresholds(mu)) {
        if (!(r > Rational(0))) continue;
        for (PointMask u : sp->opens()) {
          if (!(mu.measure_of(u) > r)) continue;
          ++joins;
          if (!verify_selfjoin(mu, u, r).pass) {
            detail = "join inequality failed";
            return false;
          }
        }
        for (PointMask u1 : sp->opens()) {
          for (PointMask u2 : sp->opens()) {
            if (!(mu.measure_of(u1 | u2) > r)) continue;
            const Rational d = std::min(
                {mu.measure_of(u1), mu.measure_of(u2), mu.measure_of(u1 | u2) - r});
            if (!(d > Rational(0))) continue;
            ++splits;
            if (!verify_selfsplit(mu, u1, u2, r).pass) {
              detail = "split inequality failed";
              return false;
            }
          }
        }
      }
      const FamilyCollection gamma = measure_level_collection(mu);
      ++collections;
      if (!is_self_joinable(gamma, /*hereditary=*/true) || !is_self_splittable(gamma)) {
        detail = "level collection predicates failed";
        return false;
      }
      // advance the odometer over the weight alphabet
      int i = 0;
      for (; i < n; ++i) {
        if (++pick[static_cast<size_t>(i)] < std::size(levels)) break;
        pick[static_cast<size_t>(i)] = 0;
      }
      if (i == n) break;
    }
  }
  detail = std::to_string(joins) + " join checks, " + std::to_string(splits) +
           " split checks, " + std::to_string(collections) + " collections";
  return true;
}

bool criterion_function_space(std::string& detail) {
  int checked = 0;
  for (const SpacePtr& sp : all_small_spaces()) {
    const bool ok = function_space_matches_dual(sp, finitely_generated_collection(sp)) &&
                    function_space_matches_dual(sp, compactly_generated_collection(sp)) &&
                    function_space_matches_dual(sp, all_compact_families(sp));
    ++checked;
    if (!ok) {
      detail = "identification failed";
      return false;
    }
  }
  detail = std::to_string(checked) + " spaces, three collections each";
  return true;
}

bool criterion_determinism(std::string& detail) {
  const std::vector<SpacePtr> spaces = all_small_spaces();
  BatteryOptions opts;
  const auto a = battery_batch_to_json(run_battery_batch(spaces, opts, 1), opts).dump(2);
  const auto b = battery_batch_to_json(run_battery_batch(spaces, opts, 4), opts).dump(2);
  if (a != b) {
    detail = "reports differ between 1 and 4 workers";
    return false;
  }
  const auto j = nlohmann::ordered_json::parse(a);
  if (!j.at("all_pass").get<bool>()) {
    detail = "battery reported a failing claim";
    return false;
  }
  detail = std::to_string(a.size()) + " bytes, identical";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"01 grill duality, restriction and section compactness (n<=3 exhaustive)",
       criterion_calculus, 60.0},
      {"02 consonance collapse (n<=3 + 50 random n=4)", criterion_consonance, 120.0},
      {"03 fixed points equal brute-force maxima (|kappa|<=16)", criterion_fixed_points, 0},
      {"04 inclusion chain and finite collapse", criterion_inclusions, 0},
      {"05 joinable+hereditary+sectionable implies splittable on regular spaces",
       criterion_regular_split, 0},
      {"06 prime spaces are compactly splittable (n<=4)", criterion_prime, 0},
      {"07 meet continuity iff self-joinable (n<=3 + 50 random n=4)",
       criterion_meet_continuity, 0},
      {"08 measure join/split inequalities and level collections", criterion_measure_lemma,
       30.0},
      {"09 function space identification (p, k, kappa; n<=3)", criterion_function_space, 0},
      {"10 battery determinism across worker counts", criterion_determinism, 0},
  };
  int failures = 0;
  for (Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_target_s > 0 && secs > c.time_target_s) {
      pass = false;
      detail += " (exceeded " + std::to_string(c.time_target_s) + "s target)";
    }
    std::printf("criterion %s [%s] %.2fs%s%s\n", c.name.c_str(), pass ? "pass" : "FAIL",
                secs, detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
