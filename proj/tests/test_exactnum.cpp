#include "doctest.h"
#include "oracles.hpp"
#include "symdehn/exactnum.hpp"

using namespace symdehn;

namespace {
QuadElem im(long D, Rational x, Rational y) { return QuadElem(QuadField::imaginary(D), x, y); }
}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("integer helpers") {
    CHECK(ipow(Integer(3), 5) == 243);
    CHECK(exact_root(Integer(243), 5) == Integer(3));
    CHECK_FALSE(exact_root(Integer(244), 5).has_value());
    CHECK(exact_root(Integer(-27), 3) == Integer(-3));
    CHECK_FALSE(exact_root(Integer(-4), 2).has_value());
    Integer n = 96;
    CHECK(strip_factor(n, 2) == 5);
    CHECK(n == 3);
    CHECK(is_squarefree(Integer(30)));
    CHECK_FALSE(is_squarefree(Integer(12)));
    auto [s, m] = squarefree_split(Integer(72));
    CHECK(s == 6);
    CHECK(m == 2);
  }

  TEST_CASE("rational basics") {
    Rational a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "3/2");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
  }

  TEST_CASE("squarefree_decompose") {
    auto d = squarefree_decompose(Rational(12));
    CHECK(d.r == Rational(2));
    CHECK(d.m == 3);
    d = squarefree_decompose(Rational(1));
    CHECK(d.r == Rational(1));
    CHECK(d.m == 1);
    d = squarefree_decompose(Rational(9, 2));
    CHECK(d.r == Rational(3, 2));
    CHECK(d.m == 2);
    CHECK_THROWS_AS(squarefree_decompose(Rational(0)), DomainError);
    CHECK_THROWS_AS(squarefree_decompose(Rational(-3)), DomainError);
  }

  TEST_CASE("quadratic fields") {
    CHECK(QuadField::of(-1).str() == "Q(i)");
    CHECK(QuadField::imaginary(7).str() == "Q(i*sqrt(7))");
    CHECK(QuadField::of(5).str() == "Q(sqrt(5))");
    CHECK_THROWS_AS(QuadField::of(4), DomainError);
    CHECK_THROWS_AS(QuadField::of(1), DomainError);
    CHECK_THROWS_AS(QuadField::of(0), DomainError);
    CHECK(QuadField::containing_sqrt_of(Rational(-32, 9)) == QuadField::of(-2));
  }

  TEST_CASE("quad_norm") {
    CHECK(quad_norm(im(7, -6, 2)) == Rational(64));
    CHECK(quad_norm(QuadElem(QuadField::of(-7), 1)) == Rational(1));
    CHECK((im(2, 1, 1) * im(2, 1, -1)) == QuadElem(QuadField::of(-2), 3));
    CHECK(quad_norm(im(2, 1, 1)) == Rational(3));
  }

  TEST_CASE("arithmetic and mixed fields") {
    QuadElem z = im(7, Rational(-1, 8), Rational(3, 8));
    CHECK((z * z.inverse()).is_one());
    CHECK((z.pow(3) * z.pow(-3)).is_one());
    CHECK_THROWS_AS(im(7, 0, 1) + im(2, 0, 1), MixedFieldError);
    // rational elements combine with anything
    QuadElem two(QuadField::of(3), 2);
    CHECK((two * im(7, 0, 1)) == im(7, 0, 2));
    CHECK_THROWS_AS(QuadElem(QuadField::of(-7), 0).inverse(), DomainError);
  }

  TEST_CASE("quad_sqrt") {
    auto r = quad_sqrt(im(2, -1, 2));
    REQUIRE(r.has_value());
    CHECK(*r == im(2, 1, 1));
    CHECK((*r) * (*r) == im(2, -1, 2));
    r = quad_sqrt(QuadElem(QuadField::of(-1), 4));
    REQUIRE(r.has_value());
    CHECK(*r == QuadElem(QuadField::of(-1), 2));
    CHECK_FALSE(quad_sqrt(im(7, -3, 1)).has_value());
    // -4 = (2i)^2 in Q(i) only
    CHECK(quad_sqrt(QuadElem(QuadField::of(-1), -4)).has_value());
    CHECK_FALSE(quad_sqrt(QuadElem(QuadField::of(-2), -4)).has_value());
  }

  TEST_CASE("quad_sqrt oracle on -3 + i sqrt 7") {
    // x^2 - 7y^2 = -3, 2xy = 1 gives 4x^4 + 12x^2 - 7 = 0, so x^2 = 1/2
    mpq_class x2(1, 2);
    CHECK(4 * x2 * x2 + 12 * x2 - 7 == 0);
    CHECK_FALSE(oracle::is_kth_power(x2.get_num() * x2.get_den(), 2));
  }

  TEST_CASE("string round trip") {
    QuadElem z = im(15, Rational(-1673, 2048), Rational(305, 2048));
    CHECK(z.str() == "(-1673/2048 + 305/2048*sqrt(-15))");
    CHECK(QuadElem::parse(z.str()) == z);
    CHECK(QuadElem::parse("(3 + 0*sqrt(5))") == QuadElem(QuadField::of(5), 3));
    CHECK_THROWS_AS(QuadElem::parse("(1 + 2*sqrt(4))"), ParseError);
    CHECK_THROWS_AS(QuadElem::parse("1 + 2"), ParseError);
  }

  TEST_CASE("surd lengths") {
    SurdLength a = SurdLength::sqrt_of(Rational(27, 4));
    CHECK(a.r() == Rational(3, 2));
    CHECK(a.m() == 3);
    SurdLength b = SurdLength::sqrt_of(Rational(6));
    CHECK((a * b) == SurdLength(Rational(9, 2), 2));
    CHECK(a.str() == "3/2*sqrt(3)");
    CHECK_THROWS_AS(SurdLength(Rational(1), 4), DomainError);
  }

  TEST_CASE("tower") {
    TowerElem i = TowerElem::i();
    CHECK(tower_pow(i, 4).is_one());
    CHECK(tower_pow(i, 2) == TowerElem(QuadElem(TowerElem::base(), -1), QuadElem(TowerElem::base(), 0)));
    TowerElem w(QuadElem(TowerElem::base(), Rational(3, 5)), QuadElem(TowerElem::base(), Rational(4, 5)));
    CHECK(w.rel_norm().is_one());
    CHECK((w * w.conj()).is_one());
    CHECK(tower_pow(w, 0).is_one());
  }
}
