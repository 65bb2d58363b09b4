#include "symdehn/kummer.hpp"

#include <numeric>

#include "symdehn/pyramid.hpp"

namespace symdehn {

UnityContent roots_of_unity_in(const QuadField& field) {
  if (field.d() == -1) return {field, 4};
  if (field.d() == -3) return {field, 6};
  return {field, 2};
}

UnityContent roots_of_unity_in(const Integer& D) {
  if (D <= 0) throw DomainError("roots_of_unity_in expects D > 0 for Q(i sqrt D)");
  return roots_of_unity_in(QuadField::imaginary(D));
}

std::vector<QuadElem> roots_of_unity(const QuadField& f) {
  std::vector<QuadElem> out{QuadElem(f, 1), QuadElem(f, -1)};
  if (f.d() == -1) {
    out.emplace_back(f, 0, 1);
    out.emplace_back(f, 0, -1);
  } else if (f.d() == -3) {
    for (int sx : {1, -1})
      for (int sy : {1, -1}) out.emplace_back(f, Rational(sx, 2), Rational(sy, 2));
  }
  return out;
}

bool is_root_of_unity(const QuadElem& z) {
  if (z.is_rational()) return z.x() == Rational(1) || z.x() == Rational(-1);
  if (!z.field().is_imaginary()) return false;
  return z.pow(roots_of_unity_in(z.field()).group_order).is_one();
}

Prop8Result prop8_tests(const QuadElem& epsilon, const Rational& d) {
  if (d.sign() <= 0) throw DomainError("prop8_tests needs d > 0");
  if (epsilon.is_rational() || !epsilon.field().is_imaginary())
    throw DomainError("prop8_tests needs a non-real epsilon in an imaginary field");
  Prop8Result r{rational_sqrt(d).has_value(), std::nullopt};
  if (!r.alpha_is_square) r.minus_alpha_is_square = rational_sqrt(Rational(epsilon.field().D()) / d).has_value();
  return r;
}

bool is_fourth_power(const QuadElem& x) {
  auto r = quad_sqrt(x);
  if (!r) return false;
  return quad_sqrt(*r).has_value() || quad_sqrt(-*r).has_value();
}

bool check_A1(const QuadElem& alpha) {
  if (alpha.is_zero()) throw DomainError("check_A1 needs alpha != 0");
  if (quad_sqrt(alpha)) return false;
  return !is_fourth_power(alpha * Rational(-4));
}

bool check_A2(unsigned exponent, const QuadField& field) {
  if (exponent < 2) throw DomainError("check_A2 needs exponent >= 2");
  // quadratic subfields of Q(mu_4): Q(i); of Q(mu_{2^n}), n >= 3: Q(i), Q(sqrt 2), Q(sqrt -2)
  const Integer& d = field.d();
  if (d == -1) return false;
  if (exponent >= 3 && (d == 2 || d == -2)) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Smallest k (up to unfactored cofactors) with t | k^N.
Integer power_cover(Integer t, unsigned long N) {
  Integer k = 1;
  for (unsigned long p = 2; p < 1000000; ++p) {
    if (Integer(p) * p > t) break;
    unsigned long e = strip_factor(t, p);
    if (e) k *= ipow(Integer(p), (e + N - 1) / N);
  }
  return k * t;
}

}  // namespace

PowerTestResult nth_power_test(const QuadElem& alpha, unsigned long N, const PowerTestOptions& options) {
  if (N == 0) throw DomainError("nth_power_test needs N >= 1");
  const QuadField& f = alpha.field();
  if (!f.is_imaginary()) throw DomainError("nth_power_test is implemented for imaginary quadratic fields only");
  if (N == 1 || alpha.is_zero()) return {true, alpha};
  auto c = rational_root(alpha.norm(), N);
  if (!c) return {false, std::nullopt};
  Integer t = lcm(alpha.x().den(), alpha.y().den());
  Integer k = power_cover(t, N);
  // beta = k*lambda is integral: beta = (u + w sqrt d)/2 with u^2 + D w^2 = 4 k^2 c
  Rational M = Rational(Integer(4 * k * k)) * *c;
  if (!M.is_integer()) return {false, std::nullopt};
  Integer Mi = M.num();
  Integer D = f.D();
  Integer wmax;
  mpz_sqrt(wmax.get_mpz_t(), Integer(Mi / D).get_mpz_t());
  if (wmax > options.max_candidates) throw ResourceError("nth_power_test: witness search too large");
  Rational scale = Rational(Integer(2 * k)).inverse();
  for (Integer w = 0; w <= wmax; ++w) {
    Integer u2 = Mi - D * w * w;
    Integer u;
    if (!mpz_perfect_square_p(u2.get_mpz_t())) continue;
    mpz_sqrt(u.get_mpz_t(), u2.get_mpz_t());
    for (int su : {1, -1}) {
      for (int sw : {1, -1}) {
        if ((su < 0 && u == 0) || (sw < 0 && w == 0)) continue;
        QuadElem lambda(f, Rational(Integer(su * u)) * scale, Rational(Integer(sw * w)) * scale);
        if (lambda.pow(static_cast<long>(N)) == alpha) return {true, lambda};
      }
    }
  }
  return {false, std::nullopt};
}

std::string to_string(Lemma3Condition c) {
  switch (c) {
    case Lemma3Condition::unconditionally_abelian: return "unconditionally_abelian";
    case Lemma3Condition::alpha_is_nth_power: return "alpha_is_nth_power";
    case Lemma3Condition::alpha_is_half_nth_power: return "alpha_is_half_nth_power";
    case Lemma3Condition::alpha_is_minus_lambda_to_half_n: return "alpha_is_minus_lambda_to_half_n";
    case Lemma3Condition::preconditions_not_met: return "preconditions_not_met";
  }
  return "unknown";
}

Lemma3Condition lemma3_condition(const QuadElem& alpha, unsigned long N) {
  if (N < 2) throw DomainError("lemma3_condition needs N >= 2");
  if (alpha.is_zero()) throw DomainError("lemma3_condition needs alpha != 0");
  int w = roots_of_unity_in(alpha.field()).group_order;
  if (std::gcd(N, static_cast<unsigned long>(w)) > 2)
    throw UnityContentError("field " + alpha.field().str() + " contains roots of unity of order dividing " +
                            std::to_string(N) + " beyond +-1");
  if (N == 2) return Lemma3Condition::unconditionally_abelian;
  unsigned long rest = N;
  unsigned exponent = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++exponent;
  }
  if (exponent == 0) return Lemma3Condition::alpha_is_nth_power;
  if (exponent == 1) return Lemma3Condition::alpha_is_half_nth_power;
  if (check_A1(alpha) && check_A2(exponent, alpha.field())) return Lemma3Condition::alpha_is_minus_lambda_to_half_n;
  return Lemma3Condition::preconditions_not_met;
}

Lemma3Evaluation evaluate_lemma3(const QuadElem& alpha, unsigned long N) {
  Lemma3Condition c = lemma3_condition(alpha, N);
  PowerTestResult r{false, std::nullopt};
  switch (c) {
    case Lemma3Condition::unconditionally_abelian: return {c, true, std::nullopt};
    case Lemma3Condition::preconditions_not_met: return {c, std::nullopt, std::nullopt};
    case Lemma3Condition::alpha_is_nth_power: r = nth_power_test(alpha, N); break;
    case Lemma3Condition::alpha_is_half_nth_power: r = nth_power_test(alpha, N / 2); break;
    case Lemma3Condition::alpha_is_minus_lambda_to_half_n: r = nth_power_test(-alpha, N / 2); break;
  }
  return {c, r.is_power, r.witness};
}

// ---------------------------------------------------------------------------

std::string to_string(AdmissibilityReason r) {
  switch (r) {
    case AdmissibilityReason::ok: return "ok";
    case AdmissibilityReason::b_multiple_of_4: return "b_multiple_of_4";
    case AdmissibilityReason::unity_constraint_violated: return "unity_constraint_violated";
  }
  return "unknown";
}

AdmissibilityVerdict admissible_b(int n, std::int64_t a, std::int64_t b) {
  PyramidFieldData data = case_b_field_data(n, a, b);
  UnityContent unity = roots_of_unity_in(data.E);
  AdmissibilityVerdict out{true, AdmissibilityReason::ok, unity, {}};
  out.notes.push_back("E = " + data.E.str() + ", unity order " + std::to_string(unity.group_order));

  // For even b (n = 4) and b = 0 mod 4 (n = 3, 6) the fourth-power assumption
  // must hold; the two decision paths have to agree.
  bool need_a1 = (n == 4) ? (b % 2 == 0) : (b % 4 == 0);
  if (need_a1) {
    ThetaRoot tr = theta_root(n, a, b);
    Prop8Result p8 = prop8_tests(tr.epsilon, tr.d);
    bool via_prop8 = !p8.alpha_is_square && !p8.minus_alpha_is_square.value_or(true);
    bool direct = check_A1(data.alpha);
    if (via_prop8 != direct) throw InternalConsistencyError("admissible_b: square tests disagree for " + data.alpha.str());
    if (!direct) throw InternalConsistencyError("admissible_b: fourth-power assumption fails for " + data.alpha.str());
    out.notes.push_back("alpha, -alpha not squares; -4 alpha not a fourth power");
  }

  bool unity_ok = true;
  if (unity.group_order == 4) {
    unity_ok = (n == 4) ? (b % 2 != 0) : (b % 4 != 0);
  } else if (unity.group_order == 6) {
    if (n == 4) unity_ok = false;
    if (n == 3) unity_ok = (a % 3 == 0) && (b % 3 != 0);
    if (n == 6) unity_ok = (b % 3 != 0);
  }
  if (!unity_ok) {
    out.admissible = false;
    out.reason = AdmissibilityReason::unity_constraint_violated;
    out.notes.push_back("roots of unity in E force an arithmetic constraint that (a, b) violates");
    return out;
  }
  if (b % 4 == 0) {
    out.admissible = false;
    out.reason = AdmissibilityReason::b_multiple_of_4;
    out.notes.push_back("b = 0 mod 4: X^4 - alpha irreducible, so K_4(alpha) is not abelian");
  }
  return out;
}

}  // namespace symdehn
