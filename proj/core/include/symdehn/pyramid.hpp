#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symdehn/cyclo.hpp"
#include "symdehn/exactnum.hpp"

namespace symdehn {

// sin^2(pi/n), cos^2(pi/n), cos(2pi/n) for n in {3, 4, 6}.
struct BaseTrig {
  Rational sin_sq;
  Rational cos_sq;
  Rational cos_2pi_n;
};

BaseTrig base_trig(int n);
void require_supported_n(int n);

struct HeightSquared {
  Rational value;
};

// v = a/b in lowest terms.
struct CaseBRatio {
  std::int64_t a;
  std::int64_t b;
};

// Right pyramid over the regular n-gon inscribed in the unit circle.
class PyramidSpec {
public:
  static PyramidSpec with_height_squared(int n, Rational h2);
  static PyramidSpec with_ratio(int n, std::int64_t a, std::int64_t b);
  // v given as a rational; must satisfy 0 < v < sin(pi/n).
  static PyramidSpec with_v(int n, const Rational& v);

  int n() const { return n_; }
  const std::variant<HeightSquared, CaseBRatio>& param() const { return param_; }
  bool is_ratio() const { return std::holds_alternative<CaseBRatio>(param_); }
  const CaseBRatio& ratio() const { return std::get<CaseBRatio>(param_); }

  Rational h_squared() const;
  // v when it is rational.
  std::optional<Rational> v() const;

  std::string str() const;

private:
  PyramidSpec(int n, std::variant<HeightSquared, CaseBRatio> p) : n_(n), param_(std::move(p)) {}
  int n_;
  std::variant<HeightSquared, CaseBRatio> param_;
};

std::optional<Rational> height_to_v(int n, const Rational& h2);
Rational v_to_height_squared(int n, const Rational& v);

struct DihedralCosines {
  Rational cos_2theta;
  Rational cos_phi;
};

DihedralCosines dihedral_cosines(int n, const Rational& h2);

// exp(it) for the t in (0, pi) with cos t = c, -1 < c < 1.
QuadElem unit_from_cosine(const Rational& c);

struct PyramidFieldData {
  QuadField E;
  Integer D;          // E = Q(i sqrt D)
  Integer radicand;   // b^2 - 2a^2, 3b^2 - 4a^2, 3b^2 - 12a^2
  QuadElem alpha;     // exp(2 i theta)
  QuadElem exp_phi;   // exp(i phi)
  QuadElem z;         // alpha = z / z_scale, z integral
  Integer z_scale;    // b^2 - a^2, or 3(b^2 - a^2) for n = 3
};

PyramidFieldData case_b_field_data(int n, std::int64_t a, std::int64_t b);

// exp(i theta) = epsilon / sqrt(d), epsilon in E, d a positive rational.
struct ThetaRoot {
  QuadElem epsilon;
  Rational d;
};

ThetaRoot theta_root(int n, std::int64_t a, std::int64_t b);

// alpha^a * exp_phi^b
QuadElem pi_product(int n, std::int64_t a, std::int64_t b);

struct DihedralRelation {
  Rational A;  // coefficient of cos(2 theta)
  Rational B;  // coefficient of cos(phi)
  Rational C;  // right-hand side
};

// The linear relation between cos(2 theta) and cos(phi), scaled to integers.
DihedralRelation dihedral_relation(int n);

struct RationalDihedralAngles {
  RationalAngle theta;
  RationalAngle phi;
  friend bool operator==(const RationalDihedralAngles&, const RationalDihedralAngles&) = default;
};

std::vector<RationalDihedralAngles> rational_case_solutions(int n);

}  // namespace symdehn
