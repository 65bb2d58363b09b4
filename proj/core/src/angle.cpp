#include "symdehn/dehn.hpp"
#include "symdehn/kummer.hpp"

namespace symdehn {

std::string to_string(AngleRationality r) {
  switch (r) {
    case AngleRationality::known_irrational: return "known_irrational";
    case AngleRationality::known_rational: return "known_rational";
    case AngleRationality::undetermined: return "undetermined";
  }
  return "unknown";
}

std::optional<RationalAngle> rational_angle_of_unit(const QuadElem& z) {
  if (!is_root_of_unity(z)) return std::nullopt;
  if (z.is_rational()) return RationalAngle(0, 1);
  if (z.x().is_zero()) return RationalAngle(1, 2);
  // z = (+-1 +- sqrt(-3))/2
  return z.x().sign() * z.y().sign() > 0 ? RationalAngle(1, 3) : RationalAngle(2, 3);
}

Angle Angle::rational_pi(const RationalAngle& a) {
  Angle t;
  t.rational_ = a;
  t.rationality_ = AngleRationality::known_rational;
  return t;
}

Angle Angle::arg_of(const QuadElem& z) {
  if (z.norm() != Rational(1)) throw DomainError("arg_of needs |z| = 1, got " + z.str());
  if (!z.is_rational() && !z.field().is_imaginary()) throw DomainError("arg_of needs an imaginary field, got " + z.str());
  Angle t;
  t.unit_ = z;
  t.rational_ = rational_angle_of_unit(z);
  t.rationality_ = t.rational_ ? AngleRationality::known_rational : AngleRationality::known_irrational;
  return t;
}

Angle Angle::negated() const {
  if (unit_) return arg_of(unit_->conj());
  return rational_pi(RationalAngle::from_fraction(-rational_->fraction()));
}

bool Angle::same_class(const Angle& o) const {
  if (rational_ || o.rational_) return rational_ == o.rational_;
  if (rationality_ != o.rationality_) return false;
  return *unit_ == *o.unit_ || *unit_ == -*o.unit_;
}

std::string Angle::str() const {
  if (!unit_) return rational_->str();
  return "arg" + unit_->str();
}

}  // namespace symdehn
