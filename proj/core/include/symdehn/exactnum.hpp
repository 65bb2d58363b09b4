#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "symdehn/errors.hpp"

namespace symdehn {

using Integer = mpz_class;

// ---------------------------------------------------------------------------
// Integer helpers

Integer ipow(const Integer& base, unsigned long e);

// floor(x^(1/k)) exact when the root is exact; empty otherwise. Negative x is
// accepted for odd k.
std::optional<Integer> exact_root(const Integer& x, unsigned long k);

bool is_perfect_power(const Integer& x, unsigned long k);

// Removes every factor p from n (in place) and returns the multiplicity.
unsigned long strip_factor(Integer& n, unsigned long p);

// n = s^2 * m with m squarefree, n > 0.
std::pair<Integer, Integer> squarefree_split(const Integer& n);

bool is_squarefree(const Integer& n);

Integer to_integer(std::string_view text);

// ---------------------------------------------------------------------------

class Rational {
public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const;
  Rational inverse() const;
  Rational pow(long e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  // "p/q", or "p" when q = 1.
  std::string str() const;
  static Rational parse(std::string_view text);

private:
  mpq_class q_;
};

std::optional<Rational> rational_root(const Rational& x, unsigned long k);
inline std::optional<Rational> rational_sqrt(const Rational& x) { return rational_root(x, 2); }

struct SquarefreeParts {
  Rational r;
  Integer m;
};

// x = r^2 * m, r > 0, m squarefree.
SquarefreeParts squarefree_decompose(const Rational& x);

// ---------------------------------------------------------------------------

// Q(sqrt(d)), d squarefree and not 0 or 1. Imaginary fields Q(i sqrt(D)) have d = -D.
class QuadField {
public:
  static QuadField of(const Integer& d);
  static QuadField imaginary(const Integer& D) { return of(-D); }
  // Q(sqrt(x)) for a nonsquare rational x, absorbing square factors.
  static QuadField containing_sqrt_of(const Rational& x);

  const Integer& d() const { return d_; }
  bool is_imaginary() const { return d_ < 0; }
  Integer D() const { return -d_; }

  std::string str() const;

  friend bool operator==(const QuadField& a, const QuadField& b) { return a.d_ == b.d_; }

private:
  explicit QuadField(Integer d) : d_(std::move(d)) {}
  Integer d_;
};

class QuadElem {
public:
  QuadElem(QuadField field, Rational x, Rational y = Rational());

  const QuadField& field() const { return field_; }
  const Integer& d() const { return field_.d(); }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_rational() const { return y_.is_zero(); }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_one() const { return is_rational() && x_ == Rational(1); }

  QuadElem conj() const { return QuadElem(field_, x_, -y_); }
  Rational norm() const;
  Rational trace() const { return x_ + x_; }
  QuadElem inverse() const;
  QuadElem pow(long e) const;
  // Same value viewed in another field; only rational elements move freely.
  QuadElem in_field(const QuadField& f) const;

  // Sign of the real number x + y sqrt(d); requires d > 0 or y = 0.
  int real_sign() const;

  QuadElem operator-() const { return QuadElem(field_, -x_, -y_); }
  friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator/(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator*(const QuadElem& a, const Rational& c);
  friend QuadElem operator*(const Rational& c, const QuadElem& a) { return a * c; }
  friend QuadElem operator/(const QuadElem& a, const Rational& c);
  friend QuadElem operator+(const QuadElem& a, const Rational& c);
  friend QuadElem operator-(const QuadElem& a, const Rational& c);

  friend bool operator==(const QuadElem& a, const QuadElem& b);

  // "(x + y*sqrt(d))"
  std::string str() const;
  static QuadElem parse(std::string_view text);

private:
  QuadField field_;
  Rational x_;
  Rational y_;
};

// The field in which a binary operation on a and b takes place.
QuadField common_field(const QuadElem& a, const QuadElem& b);

inline Rational quad_norm(const QuadElem& z) { return z.norm(); }

// w with w^2 = alpha inside alpha's own field, if any. When two roots exist the
// one with positive rational part (or positive y when x = 0) is returned.
std::optional<QuadElem> quad_sqrt(const QuadElem& alpha);

// ---------------------------------------------------------------------------

// The positive real r * sqrt(m).
class SurdLength {
public:
  SurdLength(Rational r, Integer m);
  static SurdLength sqrt_of(const Rational& x);
  static SurdLength rational(const Rational& r) { return SurdLength(r, 1); }

  const Rational& r() const { return r_; }
  const Integer& m() const { return m_; }
  Rational squared() const { return r_ * r_ * Rational(m_); }

  friend SurdLength operator*(const SurdLength& a, const SurdLength& b);
  friend SurdLength operator*(const SurdLength& a, const Rational& c);
  friend bool operator==(const SurdLength&, const SurdLength&) = default;

  std::string str() const;

private:
  Rational r_;
  Integer m_;
};

// ---------------------------------------------------------------------------

// p + q*i with p, q in Q(sqrt(5)).
class TowerElem {
public:
  static const QuadField& base();

  TowerElem(QuadElem p, QuadElem q);
  static TowerElem one();
  static TowerElem i();

  const QuadElem& p() const { return p_; }
  const QuadElem& q() const { return q_; }

  TowerElem conj() const { return TowerElem(p_, -q_); }
  // (p + qi)(p - qi), an element of Q(sqrt(5)).
  QuadElem rel_norm() const;
  bool is_one() const { return p_.is_one() && q_.is_zero(); }

  friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator*(const TowerElem& a, const QuadElem& c);
  friend TowerElem operator/(const TowerElem& a, const QuadElem& c);
  friend bool operator==(const TowerElem& a, const TowerElem& b);

  std::string str() const;

private:
  QuadElem p_;
  QuadElem q_;
};

TowerElem tower_pow(const TowerElem& w, unsigned long k);

}  // namespace symdehn
