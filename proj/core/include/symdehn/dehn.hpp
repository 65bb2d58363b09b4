#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdehn/cyclo.hpp"
#include "symdehn/diophantine.hpp"
#include "symdehn/exactnum.hpp"
#include "symdehn/pyramid.hpp"

namespace symdehn {

enum class AngleRationality { known_irrational, known_rational, undetermined };

std::string to_string(AngleRationality r);

// An element of R/piZ: a rational multiple of pi, or arg(z) for a unit-modulus
// element z of an imaginary quadratic field.
class Angle {
public:
  static Angle rational_pi(const RationalAngle& a);
  static Angle arg_of(const QuadElem& z);

  bool is_rational_pi() const { return !unit_.has_value(); }
  AngleRationality rationality() const { return rationality_; }
  // Known rational value (mod pi), for RationalPi and decided ArgOf angles.
  std::optional<RationalAngle> rational_value() const { return rational_; }
  const std::optional<QuadElem>& unit() const { return unit_; }

  Angle negated() const;
  // Equal mod pi.
  bool same_class(const Angle& o) const;

  std::string str() const;

private:
  Angle() = default;
  std::optional<QuadElem> unit_;
  std::optional<RationalAngle> rational_;
  AngleRationality rationality_ = AngleRationality::known_rational;
};

// For a root of unity z in an imaginary quadratic field, arg(z) mod pi.
std::optional<RationalAngle> rational_angle_of_unit(const QuadElem& z);

// multiplicity * (length (x) angle)
struct DehnTerm {
  SurdLength length;
  Angle angle;
  std::int64_t multiplicity;

  Rational coefficient() const { return Rational(multiplicity) * length.r(); }
};

enum class ZeroStatus { zero, nonzero, undetermined };

std::string to_string(ZeroStatus s);

class DehnTensor {
public:
  DehnTensor() = default;
  // Drops rational angles and combines terms with equal radicand and equal angle class.
  static DehnTensor from_terms(std::vector<DehnTerm> terms);

  const std::vector<DehnTerm>& terms() const { return terms_; }
  bool is_canonical_zero() const { return terms_.empty(); }

  DehnTensor negated() const;
  DehnTensor times(std::int64_t k) const;
  friend DehnTensor operator+(const DehnTensor& a, const DehnTensor& b);
  friend DehnTensor operator-(const DehnTensor& a, const DehnTensor& b) { return a + b.negated(); }

  ZeroStatus zero_status() const;

  std::string str() const;

private:
  std::vector<DehnTerm> terms_;
};

DehnTensor scale(const DehnTensor& t, const SurdLength& lambda);

// Terms with the same radicand and field are rewritten as one term
// (length/Q) (x) (sum of n_j angle_j) with integer weights n_j.
DehnTensor merge_with_integer_weights(const DehnTensor& t);

// Exact zero test of a - b.
bool tensors_equal(const DehnTensor& a, const DehnTensor& b);

// n * sin(pi/n) (x) 2theta + n * sqrt(1 + h^2) (x) phi, merged.
DehnTensor dehn_invariant(const PyramidSpec& spec);

// ---------------------------------------------------------------------------

enum class Verdict { trivial, nontrivial };

std::string to_string(Verdict v);

enum class ObstructionKind {
  case_a_hit,
  v_irrational,
  b_mod4,
  unity_constraint,
  norm_equation_fails,
  pi_not_root_of_unity,
  hexagonal_unit_elimination,
  flat_degenerate,
};

std::string to_string(ObstructionKind k);

struct Obstruction {
  ObstructionKind kind;
  std::string detail;
  std::optional<QuadElem> value;
};

struct TrivialityReport {
  PyramidSpec spec;
  Verdict verdict;
  std::vector<Obstruction> chain;
  std::vector<std::string> evidence;
  std::optional<DehnTensor> invariant;
  std::optional<NormEquationSolution> norm_solution;
  std::optional<EliminationCertificate> certificate;
};

// verbose keeps every obstruction found; otherwise only the first is kept.
TrivialityReport triviality_verdict(const PyramidSpec& spec, bool verbose = false);

// ---------------------------------------------------------------------------

struct ComplexityBounds {
  unsigned lower;
  unsigned upper;
  bool exact() const { return lower == upper; }
};

ComplexityBounds complexity(const DehnTensor& t);

// The one-term tensor [2n sin(pi/n) + n r sqrt(1 + h^2)] (x) theta assuming phi = r theta.
struct AngleRatioHypothesis {
  std::vector<std::pair<Rational, Integer>> length_terms;  // sum of c * sqrt(m)
  Angle two_theta;
  ComplexityBounds complexity;
};

AngleRatioHypothesis dehn_under_angle_ratio(const PyramidSpec& spec, const Rational& r);

}  // namespace symdehn
