#include "symdehn/pyramid.hpp"

#include <numeric>

namespace symdehn {

void require_supported_n(int n) {
  if (n != 3 && n != 4 && n != 6) throw DomainError("base order must be 3, 4 or 6, got " + std::to_string(n));
}

BaseTrig base_trig(int n) {
  require_supported_n(n);
  switch (n) {
    case 3: return {Rational(3, 4), Rational(1, 4), Rational(-1, 2)};
    case 4: return {Rational(1, 2), Rational(1, 2), Rational(0)};
    default: return {Rational(1, 4), Rational(3, 4), Rational(1, 2)};
  }
}

// ---------------------------------------------------------------------------

PyramidSpec PyramidSpec::with_height_squared(int n, Rational h2) {
  require_supported_n(n);
  if (h2.sign() <= 0) throw DomainError("h^2 must be positive");
  return PyramidSpec(n, HeightSquared{std::move(h2)});
}

PyramidSpec PyramidSpec::with_ratio(int n, std::int64_t a, std::int64_t b) {
  require_supported_n(n);
  if (a <= 0 || b <= 0) throw DomainError("v = a/b needs positive a and b");
  if (std::gcd(a, b) != 1) throw DomainError("v = a/b must be in lowest terms");
  Rational v2 = Rational(a) * Rational(a) / (Rational(b) * Rational(b));
  if (!(v2 < base_trig(n).sin_sq))
    throw DomainError("v = " + std::to_string(a) + "/" + std::to_string(b) + " must be below sin(pi/" +
                      std::to_string(n) + ")");
  return PyramidSpec(n, CaseBRatio{a, b});
}

PyramidSpec PyramidSpec::with_v(int n, const Rational& v) {
  if (v.sign() <= 0) throw DomainError("v must be positive");
  if (!v.num().fits_slong_p() || !v.den().fits_slong_p()) throw DomainError("v out of range");
  return with_ratio(n, v.num().get_si(), v.den().get_si());
}

Rational PyramidSpec::h_squared() const {
  if (auto* h = std::get_if<HeightSquared>(&param_)) return h->value;
  const auto& r = std::get<CaseBRatio>(param_);
  return v_to_height_squared(n_, Rational(r.a) / Rational(r.b));
}

std::optional<Rational> PyramidSpec::v() const {
  if (auto* r = std::get_if<CaseBRatio>(&param_)) return Rational(r->a) / Rational(r->b);
  return height_to_v(n_, std::get<HeightSquared>(param_).value);
}

std::string PyramidSpec::str() const {
  std::string head = "P_" + std::to_string(n_);
  if (auto* r = std::get_if<CaseBRatio>(&param_))
    return head + "(v = " + std::to_string(r->a) + "/" + std::to_string(r->b) + ")";
  return head + "(h^2 = " + std::get<HeightSquared>(param_).value.str() + ")";
}

std::optional<Rational> height_to_v(int n, const Rational& h2) {
  if (h2.sign() <= 0) throw DomainError("h^2 must be positive");
  return rational_sqrt(base_trig(n).sin_sq / (Rational(1) + h2));
}

Rational v_to_height_squared(int n, const Rational& v) {
  Rational s = base_trig(n).sin_sq;
  Rational v2 = v * v;
  return (s - v2) / v2;
}

DihedralCosines dihedral_cosines(int n, const Rational& h2) {
  if (h2.sign() <= 0) throw DomainError("h^2 must be positive");
  BaseTrig t = base_trig(n);
  Rational cos_phi = -(h2 * t.cos_2pi_n + t.cos_sq) / (h2 + t.cos_sq);
  Rational cos_2theta = -(Rational(2) * cos_phi + Rational(1) + t.cos_2pi_n) / (Rational(1) - t.cos_2pi_n);
  // tan(theta) = h / cos(pi/n) gives the same value directly.
  if (cos_2theta != (t.cos_sq - h2) / (t.cos_sq + h2))
    throw InternalConsistencyError("dihedral_cosines: linear relation and tangent form disagree");
  return {cos_2theta, cos_phi};
}

QuadElem unit_from_cosine(const Rational& c) {
  Rational s2 = Rational(1) - c * c;
  if (s2.sign() <= 0) throw DomainError("unit_from_cosine needs -1 < c < 1");
  auto parts = squarefree_decompose(s2);
  // i * r * sqrt(m) = r * sqrt(-m)
  return QuadElem(QuadField::of(-parts.m), c, parts.r);
}

// ---------------------------------------------------------------------------

namespace {

struct Radical {
  QuadField field;
  Integer D;
  Integer radicand;
  Integer root_coeff;  // i sqrt(radicand) = root_coeff * sqrt(-D)
};

Radical radical_for(int n, const Integer& a, const Integer& b) {
  Integer R;
  switch (n) {
    case 4: R = b * b - 2 * a * a; break;
    case 3: R = 3 * b * b - 4 * a * a; break;
    default: R = 3 * b * b - 12 * a * a; break;
  }
  if (R <= 0) throw DomainError("degenerate pyramid: flat or out of domain");
  auto [s, m] = squarefree_split(R);
  return {QuadField::of(Integer(-m)), m, R, s};
}

}  // namespace

PyramidFieldData case_b_field_data(int n, std::int64_t a64, std::int64_t b64) {
  PyramidSpec::with_ratio(n, a64, b64);
  Integer a(static_cast<long>(a64));
  Integer b(static_cast<long>(b64));
  Radical rad = radical_for(n, a, b);
  const QuadField& E = rad.field;
  Integer q = b * b - a * a;
  Rational s(rad.root_coeff);
  Rational A(a), B(b), Q(q);
  QuadElem exp_phi(E, 0);
  QuadElem z(E, 0);
  Integer z_scale;
  switch (n) {
    case 4:
      exp_phi = QuadElem(E, -(A * A) / Q, B * s / Q);
      z = QuadElem(E, Rational(3) * A * A - B * B, Rational(2) * A * s);
      z_scale = q;
      break;
    case 3:
      exp_phi = QuadElem(E, (B * B - Rational(2) * A * A) / (Rational(2) * Q), B * s / (Rational(2) * Q));
      z = QuadElem(E, Rational(5) * A * A - Rational(3) * B * B, Rational(2) * A * s);
      z_scale = 3 * q;
      break;
    default:
      exp_phi = QuadElem(E, (-(B * B) - Rational(2) * A * A) / (Rational(2) * Q), B * s / (Rational(2) * Q));
      z = QuadElem(E, Rational(7) * A * A - B * B, Rational(2) * A * s);
      z_scale = q;
      break;
  }
  QuadElem alpha = z / Rational(z_scale);
  if (alpha.is_one()) throw DomainError("flat pyramid: exp(2 i theta) = 1");
  return {E, rad.D, rad.radicand, alpha, exp_phi, z, z_scale};
}

ThetaRoot theta_root(int n, std::int64_t a64, std::int64_t b64) {
  PyramidSpec::with_ratio(n, a64, b64);
  Integer a(static_cast<long>(a64));
  Integer b(static_cast<long>(b64));
  Radical rad = radical_for(n, a, b);
  Integer q = b * b - a * a;
  switch (n) {
    case 4: return {QuadElem(rad.field, Rational(a), Rational(rad.root_coeff)), Rational(q)};
    case 3: return {QuadElem(rad.field, Rational(a), Rational(rad.root_coeff)), Rational(Integer(3 * q))};
    default: return {QuadElem(rad.field, Rational(Integer(3 * a)), Rational(rad.root_coeff)), Rational(Integer(3 * q))};
  }
}

QuadElem pi_product(int n, std::int64_t a, std::int64_t b) {
  PyramidFieldData f = case_b_field_data(n, a, b);
  return f.alpha.pow(a) * f.exp_phi.pow(b);
}

DihedralRelation dihedral_relation(int n) {
  switch (n) {
    case 4: return {Rational(1), Rational(2), Rational(-1)};
    case 3: return {Rational(3), Rational(4), Rational(-1)};
    case 6: return {Rational(1), Rational(4), Rational(-3)};
    default: require_supported_n(n); return {};
  }
}

std::vector<RationalDihedralAngles> rational_case_solutions(int n) {
  DihedralRelation rel = dihedral_relation(n);
  BaseTrig t = base_trig(n);
  // the integer form must be proportional to (1 - c, 2, -(1 + c))
  Rational k = rel.B / Rational(2);
  if (rel.A != k * (Rational(1) - t.cos_2pi_n) || rel.C != -k * (Rational(1) + t.cos_2pi_n))
    throw InternalConsistencyError("dihedral relation table is inconsistent");
  TwoCosineSolutions sols = solve_two_cosine_relation(rel.A, rel.B, rel.C);
  if (!sols.one_cosine.empty() || !sols.diagonal.empty())
    throw InternalConsistencyError("dihedral relation produced a free family");
  std::vector<RationalDihedralAngles> out;
  for (const auto& p : sols.pairs) {
    RationalAngle theta = p.x.half();
    if (theta.is_zero() || !(theta < RationalAngle(1, 2))) continue;
    if (p.y.is_zero()) continue;
    out.push_back({theta, p.y});
  }
  return out;
}

}  // namespace symdehn
