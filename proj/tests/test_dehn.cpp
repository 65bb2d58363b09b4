#include "doctest.h"
#include "symdehn/dehn.hpp"
#include "symdehn/kummer.hpp"

using namespace symdehn;

namespace {

QuadElem im(long D, Rational x, Rational y) { return QuadElem(QuadField::imaginary(D), x, y); }

const QuadElem& exp_phi3() {
  static const QuadElem z = im(2, Rational(1, 3), Rational(2, 3));
  return z;
}

DehnTensor single(Rational r, long m, const QuadElem& z, std::int64_t k = 1) {
  return DehnTensor::from_terms({{SurdLength(r, m), Angle::arg_of(z), k}});
}

}  // namespace

TEST_SUITE("dehn") {
  TEST_CASE("angles") {
    Angle a = Angle::arg_of(exp_phi3());
    CHECK(a.rationality() == AngleRationality::known_irrational);
    CHECK(a.same_class(Angle::arg_of(-exp_phi3())));
    CHECK_FALSE(a.same_class(a.negated()));
    Angle w = Angle::arg_of(im(3, Rational(-1, 2), Rational(1, 2)));
    CHECK(w.rationality() == AngleRationality::known_rational);
    CHECK(w.rational_value() == RationalAngle(2, 3));
    CHECK(Angle::arg_of(im(1, 0, 1)).rational_value() == RationalAngle(1, 2));
    CHECK(Angle::rational_pi(RationalAngle(1, 3)).same_class(Angle::arg_of(im(3, Rational(1, 2), Rational(1, 2)))));
    CHECK_THROWS_AS(Angle::arg_of(im(2, 1, 1)), DomainError);
  }

  TEST_CASE("canonical form") {
    DehnTensor t = single(Rational(2), 3, exp_phi3()) + single(Rational(1), 3, -exp_phi3());
    REQUIRE(t.terms().size() == 1);
    CHECK(t.terms()[0].coefficient() == Rational(3));
    CHECK((t - t).is_canonical_zero());
    CHECK(DehnTensor::from_terms({{SurdLength(Rational(1), 2), Angle::rational_pi(RationalAngle(1, 3)), 4}})
              .is_canonical_zero());
    CHECK(DehnTensor().zero_status() == ZeroStatus::zero);
  }

  TEST_CASE("dehn invariants of the crystal pieces") {
    CHECK(dehn_invariant(PyramidSpec::with_height_squared(4, Rational(1, 2))).is_canonical_zero());
    DehnTensor p3 = dehn_invariant(PyramidSpec::with_height_squared(3, Rational(2)));
    CHECK(p3.terms().size() == 1);
    CHECK(tensors_equal(p3, single(Rational(6), 3, exp_phi3())));
    DehnTensor p4 = dehn_invariant(PyramidSpec::with_height_squared(4, Rational(1)));
    CHECK(tensors_equal(p4, single(Rational(6), 2, exp_phi3(), -1)));
    QuadElem exp_phi4 = im(2, Rational(-1, 3), Rational(2, 3));
    CHECK(tensors_equal(p4, single(Rational(6), 2, exp_phi4)));
  }

  TEST_CASE("scale") {
    DehnTensor t = single(Rational(6), 3, exp_phi3());
    DehnTensor s = scale(t, SurdLength::sqrt_of(Rational(2)));
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].length == SurdLength(Rational(6), 6));
    CHECK(scale(DehnTensor(), SurdLength::sqrt_of(Rational(7))).is_canonical_zero());
    DehnTensor rel = scale(single(Rational(6), 2, exp_phi3(), -1), SurdLength::sqrt_of(Rational(3))) +
                     scale(t, SurdLength::sqrt_of(Rational(2)));
    CHECK(rel.is_canonical_zero());
  }

  TEST_CASE("merge with integer weights") {
    // n = 4, v = 1/3: sin(pi/4) (x) 2theta and sqrt(1 + h^2) (x) phi share the radicand 2
    PyramidSpec spec = PyramidSpec::with_ratio(4, 1, 3);
    DehnTensor t = dehn_invariant(spec);
    REQUIRE(t.terms().size() == 1);
    PyramidFieldData f = case_b_field_data(4, 1, 3);
    // (sqrt(1 + h^2)/b) (x) (2a theta + b phi), times n
    SurdLength l = SurdLength::sqrt_of(Rational(1) + spec.h_squared());
    DehnTensor expected = DehnTensor::from_terms({{l * Rational(1, 3), Angle::arg_of(pi_product(4, 1, 3)), 4}});
    CHECK(tensors_equal(t, expected));
    CHECK(f.alpha.pow(1) * f.exp_phi.pow(3) == pi_product(4, 1, 3));

    DehnTensor u = single(Rational(1), 2, exp_phi3()) + single(Rational(1), 5, exp_phi3());
    CHECK(merge_with_integer_weights(u).terms().size() == 2);

    // x (x) t + x (x) (pi - t) = 0
    DehnTensor v = single(Rational(1), 2, exp_phi3()) + single(Rational(1), 2, -exp_phi3().conj());
    CHECK(merge_with_integer_weights(v).is_canonical_zero());
  }

  TEST_CASE("zero status across fields") {
    DehnTensor t = single(Rational(1), 2, exp_phi3()) + single(Rational(1), 2, im(7, Rational(-1, 8), Rational(3, 8)));
    CHECK(t.zero_status() == ZeroStatus::nonzero);
  }

  TEST_CASE("verdicts") {
    auto r = triviality_verdict(PyramidSpec::with_height_squared(4, Rational(1, 2)));
    CHECK(r.verdict == Verdict::trivial);
    CHECK(r.chain.front().kind == ObstructionKind::case_a_hit);

    r = triviality_verdict(PyramidSpec::with_v(4, Rational(1, 3)));
    CHECK(r.verdict == Verdict::nontrivial);
    REQUIRE(r.chain.size() == 1);
    CHECK(r.chain[0].kind == ObstructionKind::pi_not_root_of_unity);
    CHECK(r.chain[0].value == im(7, Rational(87, 256), Rational(91, 256)));

    r = triviality_verdict(PyramidSpec::with_v(4, Rational(2, 5)));
    CHECK(r.chain.front().kind == ObstructionKind::norm_equation_fails);

    r = triviality_verdict(PyramidSpec::with_ratio(4, 1, 4));
    CHECK(r.chain.front().kind == ObstructionKind::b_mod4);

    r = triviality_verdict(PyramidSpec::with_height_squared(4, Rational(4)));
    CHECK(r.chain.front().kind == ObstructionKind::v_irrational);

    r = triviality_verdict(PyramidSpec::with_ratio(6, 1, 5));
    CHECK(r.chain.front().kind == ObstructionKind::hexagonal_unit_elimination);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->member.b == 5);

    r = triviality_verdict(PyramidSpec::with_ratio(6, 1, 3));
    CHECK(r.chain.front().kind == ObstructionKind::pi_not_root_of_unity);
    CHECK(r.chain.front().value == im(15, Rational(-1673, 2048), Rational(305, 2048)));

    r = triviality_verdict(PyramidSpec::with_ratio(3, 1, 2));
    CHECK(r.chain.front().kind == ObstructionKind::pi_not_root_of_unity);
    r = triviality_verdict(PyramidSpec::with_ratio(3, 3, 5));
    CHECK(r.chain.front().kind == ObstructionKind::pi_not_root_of_unity);
    CHECK(r.chain.front().value->field() == QuadField::imaginary(39));
  }

  TEST_CASE("verbose chain collects every obstruction") {
    auto quiet = triviality_verdict(PyramidSpec::with_ratio(4, 1, 4));
    auto loud = triviality_verdict(PyramidSpec::with_ratio(4, 1, 4), true);
    CHECK(quiet.chain.size() == 1);
    CHECK(loud.chain.size() > 1);
    CHECK(loud.chain.front().kind == quiet.chain.front().kind);
    CHECK(loud.chain.back().kind == ObstructionKind::pi_not_root_of_unity);
  }

  TEST_CASE("complexity") {
    CHECK(complexity(DehnTensor()).lower == 0);
    CHECK(complexity(DehnTensor()).upper == 0);
    auto c = complexity(single(Rational(6), 3, exp_phi3()));
    CHECK(c.lower == 1);
    CHECK(c.upper == 1);
    c = complexity(dehn_invariant(PyramidSpec::with_height_squared(4, Rational(4))));
    CHECK(c.lower == 2);
    CHECK(c.upper == 2);
    // the same irrational angle on two independent lengths collapses to one term
    c = complexity(single(Rational(1), 2, exp_phi3()) + single(Rational(1), 3, exp_phi3()));
    CHECK(c.lower == 1);
    CHECK(c.upper == 1);
    // phi3 and 2 phi3 are dependent
    c = complexity(single(Rational(1), 2, exp_phi3()) + single(Rational(1), 3, exp_phi3().pow(2)));
    CHECK(c.exact());
    CHECK(c.upper == 1);
    // different fields are independent
    c = complexity(single(Rational(1), 2, exp_phi3()) + single(Rational(1), 3, im(7, Rational(-1, 8), Rational(3, 8))));
    CHECK(c.lower == 2);
  }

  TEST_CASE("angle ratio hypothesis") {
    auto h = dehn_under_angle_ratio(PyramidSpec::with_height_squared(4, Rational(4)), Rational(2));
    CHECK(h.complexity.lower == 1);
    CHECK(h.length_terms.size() == 2);
    auto z = dehn_under_angle_ratio(PyramidSpec::with_height_squared(4, Rational(1, 2)), Rational(8, 3));
    CHECK(z.complexity.upper == 0);
    CHECK_THROWS_AS(dehn_under_angle_ratio(PyramidSpec::with_height_squared(4, Rational(4)), Rational(0)), DomainError);
  }
}
