#include "symdehn/exactnum.hpp"

namespace symdehn {

const QuadField& TowerElem::base() {
  static const QuadField f = QuadField::of(5);
  return f;
}

TowerElem::TowerElem(QuadElem p, QuadElem q) : p_(p.in_field(base())), q_(q.in_field(base())) {}

TowerElem TowerElem::one() { return TowerElem(QuadElem(base(), 1), QuadElem(base(), 0)); }

TowerElem TowerElem::i() { return TowerElem(QuadElem(base(), 0), QuadElem(base(), 1)); }

QuadElem TowerElem::rel_norm() const { return p_ * p_ + q_ * q_; }

TowerElem operator+(const TowerElem& a, const TowerElem& b) { return TowerElem(a.p_ + b.p_, a.q_ + b.q_); }

TowerElem operator-(const TowerElem& a, const TowerElem& b) { return TowerElem(a.p_ - b.p_, a.q_ - b.q_); }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
  return TowerElem(a.p_ * b.p_ - a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_);
}

TowerElem operator*(const TowerElem& a, const QuadElem& c) { return TowerElem(a.p_ * c, a.q_ * c); }

TowerElem operator/(const TowerElem& a, const QuadElem& c) { return TowerElem(a.p_ / c, a.q_ / c); }

bool operator==(const TowerElem& a, const TowerElem& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

std::string TowerElem::str() const { return p_.str() + " + " + q_.str() + "*i"; }

TowerElem tower_pow(const TowerElem& w, unsigned long k) {
  TowerElem result = TowerElem::one();
  TowerElem base = w;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace symdehn
