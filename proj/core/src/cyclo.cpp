#include "symdehn/cyclo.hpp"

#include <map>
#include <numeric>

namespace symdehn {

unsigned long euler_phi(unsigned long m) {
  if (m == 0) throw DomainError("euler_phi(0)");
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& monic) {
  if (monic.empty() || monic.back() != 1) throw DomainError("poly_div_exact: divisor must be monic");
  if (num.size() < monic.size()) throw DomainError("poly_div_exact: divisor degree too large");
  IntPoly rem = num;
  std::size_t dq = num.size() - monic.size();
  IntPoly quot(dq + 1, Integer(0));
  for (std::size_t k = dq + 1; k-- > 0;) {
    Integer c = rem[k + monic.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < monic.size(); ++j) rem[k + j] -= c * monic[j];
  }
  for (const Integer& c : rem)
    if (c != 0) throw InternalConsistencyError("poly_div_exact: nonzero remainder");
  return quot;
}

IntPoly cyclotomic_poly(unsigned long m) {
  if (m == 0) throw DomainError("cyclotomic_poly(0)");
  std::vector<unsigned long> divisors;
  for (unsigned long d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::map<unsigned long, IntPoly> phi;
  for (unsigned long d : divisors) {
    IntPoly xd(d + 1, Integer(0));
    xd[0] = -1;
    xd[d] = 1;
    IntPoly denom{Integer(1)};
    for (unsigned long e : divisors) {
      if (e >= d) break;
      if (d % e == 0) denom = poly_mul(denom, phi.at(e));
    }
    phi[d] = poly_div_exact(xd, denom);
  }
  return phi.at(m);
}

// ---------------------------------------------------------------------------

RationalAngle::RationalAngle(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("angle with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  p %= q;
  if (p < 0) p += q;
  std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

RationalAngle RationalAngle::from_fraction(const Rational& f) {
  if (!f.num().fits_slong_p() || !f.den().fits_slong_p()) throw DomainError("angle fraction out of range");
  return RationalAngle(f.num().get_si(), f.den().get_si());
}

unsigned long RationalAngle::order() const {
  std::int64_t g = std::gcd(p_, std::int64_t{2});
  if (p_ == 0) g = 2;
  return static_cast<unsigned long>(2 * q_ / g);
}

std::string RationalAngle::str() const {
  if (p_ == 0) return "0";
  std::string head = p_ == 1 ? "pi" : std::to_string(p_) + "*pi";
  return head + "/" + std::to_string(q_);
}

// ---------------------------------------------------------------------------

CyclotomicField::CyclotomicField(unsigned long m, IntPoly modulus) : m_(m), modulus_(std::move(modulus)) {
  std::size_t deg = degree();
  powers_.reserve(m_);
  std::vector<Integer> cur(deg, Integer(0));
  cur[0] = 1;
  for (unsigned long e = 0; e < m_; ++e) {
    powers_.push_back(cur);
    // multiply by X and reduce with the monic modulus
    Integer top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * modulus_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(unsigned long m) {
  return std::shared_ptr<const CyclotomicField>(new CyclotomicField(m, cyclotomic_poly(m)));
}

const std::vector<Integer>& CyclotomicField::zeta_power(long e) const {
  long mm = static_cast<long>(m_);
  long r = e % mm;
  if (r < 0) r += mm;
  return powers_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------

CycloElem::CycloElem(CyclotomicFieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree()) throw DomainError("cyclotomic element has wrong length");
}

CycloElem CycloElem::constant(CyclotomicFieldPtr field, const Rational& c) {
  std::vector<Rational> v(field->degree());
  v[0] = c;
  return CycloElem(std::move(field), std::move(v));
}

CycloElem CycloElem::zeta(CyclotomicFieldPtr field, long e) {
  const auto& p = field->zeta_power(e);
  std::vector<Rational> v(p.begin(), p.end());
  return CycloElem(std::move(field), std::move(v));
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

namespace {

void require_same_field(const CycloElem& a, const CycloElem& b) {
  if (a.m() != b.m()) throw MixedFieldError("cyclotomic elements of different conductors");
}

}  // namespace

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  std::vector<Rational> v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
  return CycloElem(a.field_, std::move(v));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  std::vector<Rational> v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coeffs_[i];
  return CycloElem(a.field_, std::move(v));
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  require_same_field(a, b);
  std::size_t deg = a.coeffs_.size();
  std::vector<Rational> prod(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  const IntPoly& mod = a.field_->modulus();
  for (std::size_t k = prod.size(); k-- > deg;) {
    Rational c = prod[k];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= deg; ++j) prod[k - deg + j] -= c * Rational(mod[j]);
  }
  prod.resize(deg);
  return CycloElem(a.field_, std::move(prod));
}

CycloElem operator*(const CycloElem& a, const Rational& c) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return CycloElem(a.field_, std::move(v));
}

CycloElem operator+(const CycloElem& a, const Rational& c) {
  std::vector<Rational> v = a.coeffs_;
  v[0] += c;
  return CycloElem(a.field_, std::move(v));
}

bool operator==(const CycloElem& a, const CycloElem& b) { return a.m() == b.m() && a.coeffs_ == b.coeffs_; }

CycloElem cos_as_cyclo(const RationalAngle& a) { return cos_as_cyclo(a, CyclotomicField::make(2 * a.q())); }

CycloElem cos_as_cyclo(const RationalAngle& a, const CyclotomicFieldPtr& field) {
  unsigned long n = a.order();
  if (field->m() % n) throw DomainError("cos_as_cyclo: conductor does not contain the angle");
  // exp(i*pi*p/q) = zeta_n^k with k/n = p/(2q)
  long k = static_cast<long>(a.p() * static_cast<std::int64_t>(n) / (2 * a.q()));
  long e = k * static_cast<long>(field->m() / n);
  const auto& plus = field->zeta_power(e);
  const auto& minus = field->zeta_power(-e);
  std::vector<Rational> v(field->degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(Integer(plus[i] + minus[i]), Integer(2));
  return CycloElem(field, std::move(v));
}

}  // namespace symdehn
