#include <doctest.h>

#include <set>

#include "fintopo/enumerate.hpp"
#include "fixtures.hpp"

using namespace fintopo;
using namespace fintopo::fixtures;

namespace {

// Independent oracle: up-sets of a preorder by the literal definition,
// checking every pair of points.
std::set<PointMask> upsets_by_pairs(const Preorder& p) {
  std::set<PointMask> out;
  for (PointMask s = 0; s < (PointMask{1} << p.n); ++s) {
    bool ok = true;
    for (int x = 0; x < p.n && ok; ++x)
      for (int y = 0; y < p.n && ok; ++y)
        if ((s >> x & 1) && (p.up[static_cast<size_t>(x)] >> y & 1) && !(s >> y & 1))
          ok = false;
    if (ok) out.insert(s);
  }
  return out;
}

Preorder chain_ab() {  // a <= b
  Preorder p;
  p.n = 2;
  p.up = {0b11, 0b10};
  return p;
}

}  // namespace

TEST_CASE("validate_topology accepts the fixtures and canonicalizes order") {
  const SpacePtr s = s2();
  CHECK(s->open_count() == 3);
  CHECK(s->opens() == std::vector<PointMask>{0, 1, 3});
  CHECK(discrete3()->open_count() == 8);
  // unsorted, duplicated input comes out canonical
  const SpacePtr t = make_space(2, {3, 0, 1, 1});
  CHECK(t->opens() == std::vector<PointMask>{0, 1, 3});
}

TEST_CASE("validate_topology rejects defective open systems") {
  try {
    make_space(2, {0, 1, 2});
    FAIL("expected a missing-full error");
  } catch (const TopoError& e) {
    CHECK(e.code() == errc::missing_full);
  }
  try {
    make_space(2, {1, 3});
    FAIL("expected a missing-empty error");
  } catch (const TopoError& e) {
    CHECK(e.code() == errc::missing_empty);
  }
  try {
    make_space(3, {0, 1, 2, 7});  // {a} | {b} = {a,b} missing
    FAIL("expected a union-closure error");
  } catch (const TopoError& e) {
    CHECK(e.code() == errc::not_closed_under_union);
    REQUIRE(e.witness().has_value());
    CHECK((e.witness()->first | e.witness()->second) == 3);
  }
  try {
    make_space(3, {0, 3, 5, 7});  // {a,b} & {a,c} = {a} missing
    FAIL("expected an intersection-closure error");
  } catch (const TopoError& e) {
    CHECK(e.code() == errc::not_closed_under_intersection);
  }
  CHECK_THROWS_AS(make_space(2, {0, 4, 3, 7}), TopoError);  // stray point bit
}

TEST_CASE("alexandrov_from_preorder matches the pairwise up-set oracle") {
  SUBCASE("identity on 3 points is discrete") {
    Preorder p;
    p.n = 3;
    p.up = {1, 2, 4};
    CHECK(alexandrov_from_preorder(p)->open_count() == 8);
  }
  SUBCASE("two point chain") {
    const auto oracle = upsets_by_pairs(chain_ab());
    CHECK(oracle == std::set<PointMask>{0, 2, 3});
    const SpacePtr s = alexandrov_from_preorder(chain_ab());
    CHECK(std::set<PointMask>(s->opens().begin(), s->opens().end()) == oracle);
  }
  SUBCASE("prime fixture from p <= x, p <= y") {
    Preorder p;
    p.n = 3;
    p.up = {0b111, 0b010, 0b100};
    const SpacePtr s = alexandrov_from_preorder(p);
    CHECK(*s == *p3());
    CHECK(std::set<PointMask>(s->opens().begin(), s->opens().end()) == upsets_by_pairs(p));
  }
  SUBCASE("invalid relations are rejected") {
    Preorder p;
    p.n = 2;
    p.up = {0b01, 0b01};  // b misses its diagonal bit
    CHECK_THROWS_AS(alexandrov_from_preorder(p), TopoError);
    Preorder q;
    q.n = 3;
    q.up = {0b011, 0b110, 0b100};  // a<=b, b<=c but not a<=c
    CHECK_THROWS_AS(alexandrov_from_preorder(q), TopoError);
  }
}

TEST_CASE("specialization preorder") {
  SUBCASE("discrete is the identity relation") {
    const Preorder p = specialization_preorder(*discrete3());
    CHECK(p.up == std::vector<PointMask>{1, 2, 4});
  }
  SUBCASE("sierpinski: b below a, not conversely") {
    const Preorder p = specialization_preorder(*s2());
    CHECK((p.up[1] >> 0 & 1) == 1);  // b <= a
    CHECK((p.up[0] >> 1 & 1) == 0);  // not a <= b
  }
  SUBCASE("indiscrete is the total relation") {
    const Preorder p = specialization_preorder(*indiscrete2());
    CHECK(p.up == std::vector<PointMask>{3, 3});
  }
}

TEST_CASE("preorder and topology are mutually inverse on all spaces up to n=4") {
  for (int n = 1; n <= 4; ++n) {
    for (const SpacePtr& s : enumerate_spaces(n)) {
      const SpacePtr round = alexandrov_from_preorder(specialization_preorder(*s));
      CHECK(*round == *s);
    }
  }
}

TEST_CASE("interior and closure") {
  const SpacePtr s = s2();
  CHECK(s->interior(0b10) == 0);        // interior {b} = {}
  CHECK(s->closure(0b01) == 0b11);      // closure {a} = X
  CHECK(q4()->closure(0b0001) == 0b0011);  // closure {1} = {1,2}

  // idempotent, monotone, shrinking on all subsets of the fixtures
  for (const SpacePtr& sp : {s2(), discrete3(), p3(), q4()}) {
    for (PointMask a = 0; a <= sp->points(); ++a) {
      const PointMask ia = sp->interior(a);
      CHECK(subset_of(ia, a));
      CHECK(sp->interior(ia) == ia);
      for (PointMask b = a; b <= sp->points(); ++b)
        if (subset_of(a, b)) CHECK(subset_of(ia, sp->interior(b)));
    }
  }
}

TEST_CASE("regularity: definitional check vs partition characterization") {
  CHECK(discrete3()->is_regular());
  CHECK_FALSE(s2()->is_regular());
  CHECK(q4()->is_regular());
  CHECK_FALSE(p3()->is_regular());
  for (int n = 1; n <= 4; ++n) {
    for (const SpacePtr& s : enumerate_spaces(n)) {
      bool complement_closed = true;
      for (PointMask u : s->opens())
        if (!s->is_open(s->points() & ~u)) complement_closed = false;
      CHECK(s->is_regular() == complement_closed);
    }
  }
}

TEST_CASE("primeness counts non-isolated points") {
  CHECK(p3()->is_prime());
  CHECK(discrete3()->is_prime());  // zero non-isolated points
  CHECK(s2()->is_prime());
  CHECK_FALSE(indiscrete2()->is_prime());
  CHECK_FALSE(q4()->is_prime());
}

TEST_CASE("opens form a bounded lattice on every enumerated space") {
  for (int n = 1; n <= 3; ++n) {
    for (const SpacePtr& s : enumerate_spaces(n)) {
      CHECK(s->is_open(0));
      CHECK(s->is_open(s->points()));
      for (PointMask a : s->opens())
        for (PointMask b : s->opens()) {
          CHECK(s->is_open(a | b));
          CHECK(s->is_open(a & b));
        }
    }
  }
}
