#include "symdehn/exactnum.hpp"

#include <cctype>
#include <string>

namespace symdehn {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  unsigned long k = static_cast<unsigned long>(e);
  return Rational(ipow(num(), k), ipow(den(), k));
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(to_integer(text));
  Integer n = to_integer(text.substr(0, slash));
  std::string_view dtext = text.substr(slash + 1);
  if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+'))
    throw ParseError("denominator must be an unsigned integer in '" + std::string(text) + "'");
  Integer d = to_integer(dtext);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::optional<Rational> rational_root(const Rational& x, unsigned long k) {
  auto n = exact_root(x.num(), k);
  if (!n) return std::nullopt;
  auto d = exact_root(x.den(), k);
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

SquarefreeParts squarefree_decompose(const Rational& x) {
  if (x.sign() <= 0) throw DomainError("squarefree_decompose: input must be positive");
  // x = num*den / den^2
  auto [s, m] = squarefree_split(Integer(x.num() * x.den()));
  return {Rational(s, x.den()), m};
}

}  // namespace symdehn
