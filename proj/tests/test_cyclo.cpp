#include <algorithm>

#include "doctest.h"
#include "symdehn/cyclo.hpp"

using namespace symdehn;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  IntPoly p;
  for (long v : c) p.emplace_back(v);
  return p;
}

bool is_rational_value(const CycloElem& e, const Rational& r) {
  return e == CycloElem::constant(e.field(), r);
}

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == poly({-1, 1}));
    CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(5) == poly({1, 1, 1, 1, 1}));
    // oracle: X^12 - 1 divided by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6
    IntPoly x12 = poly({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    IntPoly prod = poly({1});
    for (unsigned long d : {1ul, 2ul, 3ul, 4ul, 6ul}) prod = poly_mul(prod, cyclotomic_poly(d));
    CHECK(poly_div_exact(x12, prod) == poly({1, 0, -1, 0, 1}));
    for (unsigned long m = 1; m <= 60; ++m) CHECK(cyclotomic_poly(m).size() - 1 == euler_phi(m));
    CHECK_THROWS(poly_div_exact(poly({1, 0, 1}), poly({1, 1})));
  }

  TEST_CASE("rational angles") {
    RationalAngle a(7, 6);
    CHECK(a.p() == 1);
    CHECK(a.q() == 6);
    CHECK(RationalAngle(-1, 3) == RationalAngle(2, 3));
    CHECK(RationalAngle(4, 8) == RationalAngle(1, 2));
    CHECK(RationalAngle(2, 3).order() == 3);
    CHECK(RationalAngle(1, 3).order() == 6);
    CHECK(RationalAngle(1, 2).str() == "pi/2");
    CHECK(RationalAngle(2, 3).str() == "2*pi/3");
    CHECK(RationalAngle(0, 5).is_zero());
    CHECK(RationalAngle(1, 3).supplement() == RationalAngle(2, 3));
  }

  TEST_CASE("cos_as_cyclo") {
    CHECK(is_rational_value(cos_as_cyclo(RationalAngle(1, 3)), Rational(1, 2)));
    CHECK(is_rational_value(cos_as_cyclo(RationalAngle(1, 2)), Rational(0)));
    CHECK(is_rational_value(cos_as_cyclo(RationalAngle(2, 3)), Rational(-1, 2)));
    // cos(pi/5) is a root of 4X^2 - 2X - 1
    CycloElem c = cos_as_cyclo(RationalAngle(1, 5));
    CycloElem v = c * c * Rational(4) - c * Rational(2) + Rational(-1);
    CHECK(is_rational_value(v, Rational(0)));
    CHECK_FALSE(c.is_rational());
    auto f = CyclotomicField::make(60);
    CHECK(cos_as_cyclo(RationalAngle(1, 5), f) * cos_as_cyclo(RationalAngle(1, 5), f) ==
          cos_as_cyclo(RationalAngle(2, 5), f) * Rational(1, 2) + Rational(1, 2));
    CHECK_THROWS(cos_as_cyclo(RationalAngle(1, 7), f));
  }

  TEST_CASE("niven angles") {
    CHECK(niven_angles().size() == 3);
    CHECK(niven_angle_with_cosine(Rational(-1, 2)) == RationalAngle(2, 3));
    CHECK(niven_angle_with_cosine(Rational(0)) == RationalAngle(1, 2));
    CHECK_FALSE(niven_angle_with_cosine(Rational(1, 3)).has_value());
  }

  TEST_CASE("two-cosine solver on the dihedral relations") {
    auto s4 = solve_two_cosine_relation(Rational(1), Rational(2), Rational(-1));
    REQUIRE(s4.pairs.size() == 1);
    CHECK(s4.pairs[0] == AnglePair{RationalAngle(1, 2), RationalAngle(2, 3)});
    CHECK(s4.literal_pairs == s4.pairs);
    CHECK(s4.one_cosine.empty());
    CHECK(s4.diagonal.empty());
    CHECK(solve_two_cosine_relation(Rational(3), Rational(4), Rational(-1)).empty());
    CHECK(solve_two_cosine_relation(Rational(1), Rational(4), Rational(-3)).empty());
  }

  TEST_CASE("two-cosine solver families") {
    auto s = solve_two_cosine_relation(Rational(2), Rational(0), Rational(1));
    REQUIRE(s.one_cosine.size() == 1);
    CHECK(s.one_cosine[0].fixed_slot == 0);
    CHECK(s.one_cosine[0].fixed == RationalAngle(1, 3));
    CHECK_THROWS_AS(solve_two_cosine_relation(Rational(0), Rational(0), Rational(1)), DomainError);
    auto d = solve_two_cosine_relation(Rational(1), Rational(-1), Rational(0));
    CHECK(std::find(d.diagonal.begin(), d.diagonal.end(), DiagonalFamily::equal) != d.diagonal.end());
    auto e = solve_two_cosine_relation(Rational(1), Rational(1), Rational(0));
    CHECK(std::find(e.diagonal.begin(), e.diagonal.end(), DiagonalFamily::supplementary) != e.diagonal.end());
    // cos(pi/5) - cos(2pi/5) = 1/2 is missed by the Niven-only reading
    auto g = solve_two_cosine_relation(Rational(2), Rational(-2), Rational(1));
    CHECK(std::find(g.pairs.begin(), g.pairs.end(), AnglePair{RationalAngle(1, 5), RationalAngle(2, 5)}) != g.pairs.end());
    CHECK(g.literal_pairs == std::vector<AnglePair>{{RationalAngle(1, 3), RationalAngle(1, 2)},
                                                    {RationalAngle(1, 2), RationalAngle(2, 3)}});
    CHECK(std::find(g.pairs.begin(), g.pairs.end(), AnglePair{RationalAngle(3, 5), RationalAngle(4, 5)}) != g.pairs.end());
    CHECK(g.pairs.size() == g.literal_pairs.size() + 2);
  }

  TEST_CASE("oracle two-cosine scans") {
    auto r = oracle_two_cosine(Rational(1), Rational(2), Rational(-1), 12);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == AnglePair{RationalAngle(1, 2), RationalAngle(2, 3)});
    CHECK(oracle_two_cosine(Rational(3), Rational(4), Rational(-1), 60).empty());
    CHECK(oracle_two_cosine(Rational(1), Rational(4), Rational(-3), 60).empty());
    CHECK_THROWS_AS(oracle_two_cosine(Rational(1), Rational(2), Rational(-1), 1), DomainError);
  }

  TEST_CASE("solver agrees with oracle on small relations") {
    for (long A = -2; A <= 2; ++A) {
      for (long B = -2; B <= 2; ++B) {
        if (A == 0 && B == 0) continue;
        for (long C2 = -4; C2 <= 4; ++C2) {
          Rational C(C2, 2);
          auto sol = solve_two_cosine_relation(Rational(A), Rational(B), C);
          auto expanded = sol.expand(12);
          auto scan = oracle_two_cosine(Rational(A), Rational(B), C, 12);
          CHECK_MESSAGE(expanded == scan, "A=" << A << " B=" << B << " C=" << C.str());
        }
      }
    }
  }
}
