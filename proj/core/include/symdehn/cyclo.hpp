#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symdehn/exactnum.hpp"

namespace symdehn {

// Integer polynomial, coefficients from low to high degree.
using IntPoly = std::vector<Integer>;

unsigned long euler_phi(unsigned long m);

// Phi_m, computed by dividing X^m - 1 by Phi_d for every proper divisor d of m.
IntPoly cyclotomic_poly(unsigned long m);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact quotient by a monic divisor; throws if the remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& monic);

// ---------------------------------------------------------------------------

// The angle pi*p/q taken mod pi, stored with 0 <= p/q < 1.
class RationalAngle {
public:
  RationalAngle(std::int64_t p, std::int64_t q);
  static RationalAngle from_fraction(const Rational& f);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  Rational fraction() const { return Rational(p_) / Rational(q_); }
  bool is_zero() const { return p_ == 0; }

  RationalAngle supplement() const { return RationalAngle(q_ - p_, q_); }
  // x/2 for the representative x in [0, pi).
  RationalAngle half() const { return RationalAngle(p_, 2 * q_); }
  RationalAngle twice() const { return RationalAngle(2 * p_, q_); }
  // Multiplicative order of exp(i*pi*p/q).
  unsigned long order() const;

  std::string str() const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    return a.fraction() <=> b.fraction();
  }

private:
  std::int64_t p_;
  std::int64_t q_;
};

// ---------------------------------------------------------------------------

// Q(zeta_m) with a table of zeta^e reduced mod Phi_m for 0 <= e < m.
class CyclotomicField {
public:
  static std::shared_ptr<const CyclotomicField> make(unsigned long m);

  unsigned long m() const { return m_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  const IntPoly& modulus() const { return modulus_; }
  const std::vector<Integer>& zeta_power(long e) const;

private:
  CyclotomicField(unsigned long m, IntPoly modulus);
  unsigned long m_;
  IntPoly modulus_;
  std::vector<std::vector<Integer>> powers_;
};

using CyclotomicFieldPtr = std::shared_ptr<const CyclotomicField>;

class CycloElem {
public:
  CycloElem(CyclotomicFieldPtr field, std::vector<Rational> coeffs);
  static CycloElem constant(CyclotomicFieldPtr field, const Rational& c);
  static CycloElem zeta(CyclotomicFieldPtr field, long e);

  unsigned long m() const { return field_->m(); }
  const CyclotomicFieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_rational() const;

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const CycloElem& a, const Rational& c);
  friend CycloElem operator+(const CycloElem& a, const Rational& c);
  friend bool operator==(const CycloElem& a, const CycloElem& b);

private:
  CyclotomicFieldPtr field_;
  std::vector<Rational> coeffs_;
};

// cos(pi*p/q) in Q(zeta_{2q}).
CycloElem cos_as_cyclo(const RationalAngle& a);
// cos(pi*p/q) in a field whose conductor is a multiple of a.order().
CycloElem cos_as_cyclo(const RationalAngle& a, const CyclotomicFieldPtr& field);

// ---------------------------------------------------------------------------

// The rational values of cos on (0, pi) at rational angles: pi/3, pi/2, 2pi/3.
const std::vector<RationalAngle>& niven_angles();
std::optional<RationalAngle> niven_angle_with_cosine(const Rational& c);

struct AnglePair {
  RationalAngle x;
  RationalAngle y;
  friend bool operator==(const AnglePair&, const AnglePair&) = default;
  friend auto operator<=>(const AnglePair&, const AnglePair&) = default;
};

// cos of one slot is pinned; the other angle is free in (0, pi).
struct OneCosineFamily {
  int fixed_slot;  // 0: x fixed, 1: y fixed
  RationalAngle fixed;
  friend bool operator==(const OneCosineFamily&, const OneCosineFamily&) = default;
};

enum class DiagonalFamily { equal, supplementary };  // y = x, y = pi - x

struct TwoCosineSolutions {
  std::vector<AnglePair> pairs;
  std::vector<OneCosineFamily> one_cosine;
  std::vector<DiagonalFamily> diagonal;
  // The subset of pairs where both cosines are rational (folded angles pi/2, pi/3).
  std::vector<AnglePair> literal_pairs;

  bool empty() const { return pairs.empty() && one_cosine.empty() && diagonal.empty(); }
  // Every explicit pair with both denominators <= q_max, families included.
  std::vector<AnglePair> expand(unsigned long q_max) const;
};

// All rational angles x, y in (0, pi) with A cos x + B cos y = C.
TwoCosineSolutions solve_two_cosine_relation(const Rational& A, const Rational& B, const Rational& C);

struct OracleOptions {
  unsigned long conductor_cap = 0;  // 0 means 4 * q_max
};

// Exhaustive scan over all angles with denominators <= q_max, exact in cyclotomic fields.
std::vector<AnglePair> oracle_two_cosine(const Rational& A, const Rational& B, const Rational& C,
                                         unsigned long q_max, OracleOptions options = {});

// All angles pi*p/q in (0, pi) with q <= q_max.
std::vector<RationalAngle> angles_up_to(unsigned long q_max);

}  // namespace symdehn
