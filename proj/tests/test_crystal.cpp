#include "doctest.h"
#include "symdehn/crystal.hpp"

using namespace symdehn;

TEST_SUITE("crystal") {
  TEST_CASE("regular pyramids") {
    auto ps = regular_pyramids();
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].n == 4);
    CHECK(ps[0].h_squared == QuadElem(TowerElem::base(), 1));
    CHECK(ps[0].edge == SurdLength::sqrt_of(Rational(2)));
    CHECK(ps[1].n == 3);
    CHECK(ps[1].h_squared == QuadElem(TowerElem::base(), 2));
    CHECK(ps[1].edge == SurdLength::sqrt_of(Rational(3)));
    CHECK(ps[2].n == 5);
    CHECK(ps[2].h_squared == QuadElem(TowerElem::base(), Rational(3, 2), Rational(-1, 2)));
    CHECK(ps[2].edge_squared == QuadElem(TowerElem::base(), Rational(5, 2), Rational(-1, 2)));
    for (const auto& p : ps) CHECK(p.edges_agree());
  }

  TEST_CASE("gluing relations") {
    GluingRecord r = verify_gluing_relations();
    CHECK(r.all_pass());
    CHECK(r.exp_phi3 * r.exp_phi4 == QuadElem(QuadField::of(-2), -1));
    CHECK(r.prism.is_canonical_zero());
    CHECK(r.scaled.is_canonical_zero());
    CHECK(r.crystal.is_canonical_zero());
    CHECK(r.crystal_edge_k == SurdLength::rational(Rational(2)));
    CHECK(r.crystal_edge_t == SurdLength::rational(Rational(3)));
    CHECK(r.prism_edge_squared == Rational(6));
  }

  TEST_CASE("P5 check") {
    P5Check c = p5_check();
    CHECK(c.w_norm.is_one());
    CHECK(c.w == c.w_displayed);
    CHECK_FALSE(c.w60_is_one);
    CHECK(c.i4_is_one);
    CHECK(c.exp_phi.rel_norm().is_one());
    CHECK(c.log.size() >= 5);
  }
}
