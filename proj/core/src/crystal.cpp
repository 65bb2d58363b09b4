#include "symdehn/crystal.hpp"

#include "symdehn/pyramid.hpp"

namespace symdehn {

namespace {

const QuadField& q5() { return TowerElem::base(); }

QuadElem in5(const Rational& x, const Rational& y = Rational()) { return QuadElem(q5(), x, y); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalConsistencyError(what);
}

}  // namespace

bool RegularPyramid::edges_agree() const {
  return (h_squared + Rational(1)).in_field(q5()) == edge_squared.in_field(q5());
}

std::vector<RegularPyramid> regular_pyramids() {
  std::vector<RegularPyramid> out;
  const Rational half(1, 2);
  for (int n : {4, 3}) {
    Rational h2 = v_to_height_squared(n, half);
    Rational c2 = Rational(4) * base_trig(n).sin_sq;
    out.push_back({n, in5(h2), in5(c2), SurdLength::sqrt_of(c2), "P_" + std::to_string(n) + "(h^2 = " + h2.str() + ")"});
  }
  // h = 1/golden = (sqrt 5 - 1)/2, sin^2(pi/5) = (5 - sqrt 5)/8
  QuadElem h = in5(Rational(-1, 2), Rational(1, 2));
  QuadElem c2 = in5(Rational(5, 8), Rational(-1, 8)) * Rational(4);
  out.push_back({5, h * h, c2, std::nullopt, "P_5(h = (sqrt(5) - 1)/2)"});
  for (const auto& p : out) require(p.edges_agree(), "regular pyramid edge identity fails for n = " + std::to_string(p.n));
  return out;
}

bool GluingRecord::all_pass() const {
  return phi_sum_is_pi && coincidence_n4 && coincidence_n3 && p4_matches && p3_matches && prism.is_canonical_zero() &&
         scaled.is_canonical_zero() && crystal.is_canonical_zero() && prism_edge_squared == Rational(6) &&
         crystal_edge_k == SurdLength::rational(Rational(2)) && crystal_edge_t == SurdLength::rational(Rational(3));
}

GluingRecord verify_gluing_relations() {
  PyramidFieldData d3 = case_b_field_data(3, 1, 2);
  PyramidFieldData d4 = case_b_field_data(4, 1, 2);
  ThetaRoot t3 = theta_root(3, 1, 2);
  auto sq = rational_sqrt(t3.d);
  require(sq.has_value(), "exp(i theta3) is not in E for v = 1/2");
  QuadElem exp_theta3 = t3.epsilon / *sq;

  PyramidSpec p4 = PyramidSpec::with_height_squared(4, Rational(1));
  PyramidSpec p3 = PyramidSpec::with_height_squared(3, Rational(2));
  DehnTensor dehn4 = dehn_invariant(p4);
  DehnTensor dehn3 = dehn_invariant(p3);
  Angle phi3 = Angle::arg_of(d3.exp_phi);
  DehnTensor expect4 = DehnTensor::from_terms({{SurdLength(Rational(6), 2), phi3, -1}});
  DehnTensor expect3 = DehnTensor::from_terms({{SurdLength(Rational(6), 3), phi3, 1}});

  SurdLength s2 = SurdLength::sqrt_of(Rational(2));
  SurdLength s3 = SurdLength::sqrt_of(Rational(3));
  DehnTensor prism = merge_with_integer_weights(scale(dehn4, s3) + scale(dehn3, s2));
  DehnTensor scaled =
      merge_with_integer_weights(scale(dehn4, s2 * Rational(3)) + scale(dehn3, s3 * Rational(2)));
  DehnTensor crystal = merge_with_integer_weights(scale(dehn4, s2).times(3) + scale(dehn3, s3).times(2));

  // edges: P_4(1) and P_3(sqrt 2) both have edge c = 2 sin(pi/n)
  SurdLength c4 = SurdLength::sqrt_of(Rational(4) * base_trig(4).sin_sq);
  SurdLength c3 = SurdLength::sqrt_of(Rational(4) * base_trig(3).sin_sq);

  GluingRecord rec{d3.exp_phi,
                   d4.exp_phi,
                   exp_theta3,
                   d4.alpha,
                   d3.exp_phi * d4.exp_phi == QuadElem(d3.E, -1),
                   d4.alpha == d4.exp_phi,
                   exp_theta3 == d3.exp_phi,
                   dehn4,
                   dehn3,
                   tensors_equal(dehn4, expect4),
                   tensors_equal(dehn3, expect3),
                   prism,
                   scaled,
                   crystal,
                   (c4 * s3).squared(),
                   c4 * s2,
                   c3 * s3,
                   {}};
  rec.log.push_back("exp(i phi3) = " + rec.exp_phi3.str() + ", exp(i phi4) = " + rec.exp_phi4.str());
  rec.log.push_back("exp(i phi3) exp(i phi4) = " + (rec.exp_phi3 * rec.exp_phi4).str());
  rec.log.push_back("exp(2 i theta4) = " + rec.alpha4.str() + ", exp(i theta3) = " + rec.exp_theta3.str());
  rec.log.push_back("Dehn(P_4(1)) = " + dehn4.str());
  rec.log.push_back("Dehn(P_3(sqrt 2)) = " + dehn3.str());
  rec.log.push_back("sqrt3 Dehn(P_4) + sqrt2 Dehn(P_3) = " + prism.str());
  rec.log.push_back("3 sqrt2 Dehn(P_4) + 2 sqrt3 Dehn(P_3) = " + scaled.str());
  rec.log.push_back("3 Dehn(K') + 2 Dehn(T') = " + crystal.str() + " with edges " + rec.crystal_edge_k.str() + ", " +
                    rec.crystal_edge_t.str());
  require(rec.phi_sum_is_pi, "exp(i phi3) exp(i phi4) != -1");
  require(rec.coincidence_n4, "exp(2 i theta4) != exp(i phi4)");
  require(rec.coincidence_n3, "exp(i theta3) != exp(i phi3)");
  require(rec.p4_matches && rec.p3_matches, "Dehn invariants of the regular pyramids differ from +-6 sqrt(m) (x) phi3");
  require(rec.all_pass(), "gluing relations do not reduce to the zero tensor");
  return rec;
}

P5Check p5_check() {
  const QuadElem sin2 = in5(Rational(5, 8), Rational(-1, 8));
  const QuadElem cos1 = in5(Rational(1, 4), Rational(1, 4));   // cos(pi/5)
  const QuadElem cos2 = in5(Rational(-1, 4), Rational(1, 4));  // cos(2pi/5)
  const Rational v(1, 2);
  const Rational v2 = v * v;
  std::vector<std::string> log;

  auto root = quad_sqrt(sin2 - v2);
  require(root.has_value(), "sin^2(pi/5) - 1/4 is not a square in Q(sqrt 5)");
  QuadElem r = root->real_sign() > 0 ? *root : -*root;
  log.push_back("sqrt(sin^2(pi/5) - v^2) = " + r.str());

  TowerElem exp_phi = TowerElem(-cos2 - v2, cos1 * r * Rational(2)) / in5(Rational(1) - v2);
  QuadElem cos_sq = cos1 * cos1;
  TowerElem alpha =
      TowerElem((cos_sq + Rational(1)) * v2 - sin2, cos1 * r * (Rational(2) * v)) / (sin2 * (Rational(1) - v2));
  require(exp_phi == TowerElem(in5(0, Rational(-1, 3)), in5(Rational(2, 3))), "exp(i phi) != (-sqrt 5 + 2i)/3");
  require(exp_phi.rel_norm().is_one() && alpha.rel_norm().is_one(), "P_5 exponentials are not unit-modulus");
  log.push_back("exp(i phi) = " + exp_phi.str());
  log.push_back("exp(2 i theta) = " + alpha.str());

  TowerElem w = exp_phi * exp_phi * alpha;
  TowerElem num(in5(-1, -5), in5(-8, 4));
  QuadElem den = in5(5, -1) * Rational(54);
  require(num.rel_norm() == den, "numerator norm of exp(i (phi + theta)) != 54(5 - sqrt 5)");
  TowerElem w_displayed = num * num / den;
  require(w == w_displayed, "derived W differs from the squared closed form");
  QuadElem w_norm = w.rel_norm();
  require(w_norm.is_one(), "|W| != 1");
  log.push_back("W = " + w.str());

  TowerElem w60 = tower_pow(w, 60);
  bool i4 = tower_pow(TowerElem::i(), 4).is_one();
  log.push_back("W^60 = " + w60.str());
  return {exp_phi, alpha, w, w_displayed, w_norm, w60, w60.is_one(), i4, log};
}

}  // namespace symdehn
