#include "symdehn/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace symdehn {

QuadField QuadField::of(const Integer& d) {
  if (d == 0 || d == 1) throw DomainError("quadratic field needs d != 0, 1");
  if (!is_squarefree(d)) throw DomainError("quadratic field needs squarefree d, got " + d.get_str());
  return QuadField(d);
}

QuadField QuadField::containing_sqrt_of(const Rational& x) {
  if (x.is_zero()) throw DomainError("sqrt(0) generates no quadratic field");
  auto parts = squarefree_decompose(x.abs());
  Integer d = x.sign() < 0 ? Integer(-parts.m) : parts.m;
  if (d == 1) throw DomainError("sqrt(" + x.str() + ") is rational");
  return QuadField(d);
}

std::string QuadField::str() const {
  if (d_ == -1) return "Q(i)";
  if (d_ < 0) return "Q(i*sqrt(" + Integer(-d_).get_str() + "))";
  return "Q(sqrt(" + d_.get_str() + "))";
}

// ---------------------------------------------------------------------------

QuadElem::QuadElem(QuadField field, Rational x, Rational y)
    : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {}

QuadField common_field(const QuadElem& a, const QuadElem& b) {
  if (a.is_rational()) return b.field();
  if (b.is_rational()) return a.field();
  if (!(a.field() == b.field()))
    throw MixedFieldError("mixed-field arithmetic: " + a.field().str() + " and " + b.field().str());
  return a.field();
}

Rational QuadElem::norm() const { return x_ * x_ - Rational(d()) * y_ * y_; }

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw DomainError("inverse of zero");
  return QuadElem(field_, x_ / n, -y_ / n);
}

QuadElem QuadElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadElem result(field_, 1);
  QuadElem base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

QuadElem QuadElem::in_field(const QuadField& f) const {
  if (f == field_) return *this;
  if (!is_rational()) throw MixedFieldError("cannot move " + str() + " into " + f.str());
  return QuadElem(f, x_);
}

int QuadElem::real_sign() const {
  int sx = x_.sign();
  int sy = y_.sign();
  if (sy == 0) return sx;
  if (d() < 0) throw DomainError("real_sign of a non-real element");
  if (sx >= 0 && sy >= 0) return 1;
  if (sx <= 0 && sy <= 0) return -1;
  Rational lhs = x_ * x_;
  Rational rhs = Rational(d()) * y_ * y_;
  return lhs > rhs ? sx : sy;
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  return QuadElem(common_field(a, b), a.x_ + b.x_, a.y_ + b.y_);
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
  return QuadElem(common_field(a, b), a.x_ - b.x_, a.y_ - b.y_);
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  QuadField f = common_field(a, b);
  Rational d(f.d());
  return QuadElem(f, a.x_ * b.x_ + d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_);
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return a * b.inverse();
}

QuadElem operator*(const QuadElem& a, const Rational& c) { return QuadElem(a.field_, a.x_ * c, a.y_ * c); }

QuadElem operator/(const QuadElem& a, const Rational& c) { return QuadElem(a.field_, a.x_ / c, a.y_ / c); }

QuadElem operator+(const QuadElem& a, const Rational& c) { return QuadElem(a.field_, a.x_ + c, a.y_); }

QuadElem operator-(const QuadElem& a, const Rational& c) { return QuadElem(a.field_, a.x_ - c, a.y_); }

bool operator==(const QuadElem& a, const QuadElem& b) {
  if (a.is_rational() && b.is_rational()) return a.x_ == b.x_;
  return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
}

std::string QuadElem::str() const { return "(" + x_.str() + " + " + y_.str() + "*sqrt(" + d().get_str() + "))"; }

QuadElem QuadElem::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&]() { return ParseError("malformed quadratic value '" + std::string(text) + "'"); };
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw fail();
  std::string inner = s.substr(1, s.size() - 2);
  const std::string marker = "*sqrt(";
  std::size_t at = inner.find(marker);
  if (at == std::string::npos || inner.back() != ')') throw fail();
  std::string lhs = inner.substr(0, at);
  std::string dtext = inner.substr(at + marker.size(), inner.size() - at - marker.size() - 1);
  std::size_t plus = lhs.find('+', 1);
  if (plus == std::string::npos) throw fail();
  Rational x = Rational::parse(lhs.substr(0, plus));
  Rational y = Rational::parse(lhs.substr(plus + 1));
  try {
    return QuadElem(QuadField::of(to_integer(dtext)), x, y);
  } catch (const DomainError&) {
    throw fail();
  }
}

std::optional<QuadElem> quad_sqrt(const QuadElem& alpha) {
  const QuadField& f = alpha.field();
  const Rational& X = alpha.x();
  const Rational& Y = alpha.y();
  if (alpha.is_zero()) return QuadElem(f, 0);
  if (Y.is_zero()) {
    if (X.sign() > 0) {
      if (auto r = rational_sqrt(X)) return QuadElem(f, *r);
    }
    // X = d * y^2
    if (auto y = rational_sqrt(X / Rational(f.d()))) return QuadElem(f, 0, *y);
    return std::nullopt;
  }
  // (x + y sqrt d)^2 = X + Y sqrt d  <=>  x^2 + d y^2 = X, 2xy = Y
  // so x^2 is a root of 4t^2 - 4Xt + dY^2, t = (X +- sqrt(N(alpha)))/2.
  auto s = rational_sqrt(alpha.norm());
  if (!s) return std::nullopt;
  for (const Rational& t : {(X + *s) / Rational(2), (X - *s) / Rational(2)}) {
    if (t.sign() <= 0) continue;
    if (auto x = rational_sqrt(t)) {
      QuadElem w(f, *x, Y / (Rational(2) * *x));
      if (w * w == alpha) return w;
      throw InternalConsistencyError("quad_sqrt: candidate root does not square back");
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SurdLength::SurdLength(Rational r, Integer m) : r_(std::move(r)), m_(std::move(m)) {
  if (r_.sign() <= 0) throw DomainError("surd length needs a positive coefficient");
  if (m_ < 1 || !is_squarefree(m_)) throw DomainError("surd length needs a squarefree positive radicand");
}

SurdLength SurdLength::sqrt_of(const Rational& x) {
  auto parts = squarefree_decompose(x);
  return SurdLength(parts.r, parts.m);
}

SurdLength operator*(const SurdLength& a, const SurdLength& b) {
  Integer g = gcd(a.m_, b.m_);
  Integer m = (a.m_ / g) * (b.m_ / g);
  return SurdLength(a.r_ * b.r_ * Rational(g), m);
}

SurdLength operator*(const SurdLength& a, const Rational& c) { return SurdLength(a.r_ * c, a.m_); }

std::string SurdLength::str() const {
  if (m_ == 1) return r_.str();
  return r_.str() + "*sqrt(" + m_.get_str() + ")";
}

}  // namespace symdehn
