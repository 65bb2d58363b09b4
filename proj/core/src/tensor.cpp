#include <algorithm>
#include <map>

#include "symdehn/dehn.hpp"

namespace symdehn {

std::string to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::zero: return "zero";
    case ZeroStatus::nonzero: return "nonzero";
    case ZeroStatus::undetermined: return "undetermined";
  }
  return "unknown";
}

namespace {

// Representative of the class of z mod pi with positive imaginary part.
Angle canonical_angle(const Angle& t) {
  if (!t.unit() || t.unit()->is_rational()) return t;
  if (t.unit()->y().sign() < 0) return Angle::arg_of(-*t.unit());
  return t;
}

bool term_less(const DehnTerm& x, const DehnTerm& y) {
  if (x.length.m() != y.length.m()) return x.length.m() < y.length.m();
  std::string ax = x.angle.str(), ay = y.angle.str();
  if (ax != ay) return ax < ay;
  return x.coefficient() < y.coefficient();
}

struct Slot {
  Integer m;
  Angle angle;
  Rational c;
  std::vector<DehnTerm> originals;
};

}  // namespace

DehnTensor DehnTensor::from_terms(std::vector<DehnTerm> terms) {
  std::vector<Slot> slots;
  for (auto& term : terms) {
    if (term.multiplicity == 0) continue;
    if (term.angle.rationality() == AngleRationality::known_rational) continue;
    Angle a = canonical_angle(term.angle);
    auto it = std::find_if(slots.begin(), slots.end(),
                           [&](const Slot& s) { return s.m == term.length.m() && s.angle.same_class(a); });
    DehnTerm t{term.length, a, term.multiplicity};
    if (it == slots.end()) {
      slots.push_back({term.length.m(), a, t.coefficient(), {t}});
    } else {
      it->c += t.coefficient();
      it->originals.push_back(t);
    }
  }
  DehnTensor out;
  for (auto& s : slots) {
    if (s.c.is_zero()) continue;
    if (s.originals.size() == 1) {
      out.terms_.push_back(s.originals.front());
    } else {
      out.terms_.push_back({SurdLength(s.c.abs(), s.m), s.angle, s.c.sign()});
    }
  }
  std::sort(out.terms_.begin(), out.terms_.end(), term_less);
  return out;
}

DehnTensor DehnTensor::negated() const { return times(-1); }

DehnTensor DehnTensor::times(std::int64_t k) const {
  std::vector<DehnTerm> terms = terms_;
  for (auto& t : terms) t.multiplicity *= k;
  return from_terms(std::move(terms));
}

DehnTensor operator+(const DehnTensor& a, const DehnTensor& b) {
  std::vector<DehnTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return DehnTensor::from_terms(std::move(terms));
}

std::string DehnTensor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) out += " + ";
    if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + "*";
    out += "[" + t.length.str() + " (x) " + t.angle.str() + "]";
  }
  return out;
}

DehnTensor scale(const DehnTensor& t, const SurdLength& lambda) {
  std::vector<DehnTerm> terms = t.terms();
  for (auto& term : terms) term.length = term.length * lambda;
  return DehnTensor::from_terms(std::move(terms));
}

DehnTensor merge_with_integer_weights(const DehnTensor& t) {
  // key: (m, field discriminant); rational units never survive canonicalization
  std::map<std::pair<Integer, Integer>, std::vector<DehnTerm>> groups;
  std::vector<DehnTerm> out;
  for (const auto& term : t.terms()) {
    if (!term.angle.unit()) {
      out.push_back(term);
      continue;
    }
    groups[{term.length.m(), term.angle.unit()->d()}].push_back(term);
  }
  for (auto& [key, members] : groups) {
    if (members.size() == 1) {
      out.push_back(members.front());
      continue;
    }
    Integer Q = 1;
    for (const auto& m : members) Q = lcm(Q, m.coefficient().den());
    std::vector<Integer> n;
    Integer g = 0;
    for (const auto& m : members) {
      Rational scaled = m.coefficient() * Rational(Q);
      n.push_back(scaled.num());
      g = gcd(g, scaled.num());
    }
    QuadElem z(members.front().angle.unit()->field(), 1);
    for (std::size_t j = 0; j < members.size(); ++j) {
      Integer e = n[j] / g;
      if (!e.fits_slong_p()) throw ResourceError("merge_with_integer_weights: exponent too large");
      z = z * members[j].angle.unit()->pow(e.get_si());
    }
    out.push_back({SurdLength(Rational(g) / Rational(Q), key.first), Angle::arg_of(z), 1});
  }
  return DehnTensor::from_terms(std::move(out));
}

ZeroStatus DehnTensor::zero_status() const {
  DehnTensor merged = merge_with_integer_weights(*this);
  if (merged.is_canonical_zero()) return ZeroStatus::zero;
  // Lengths with distinct radicands are Q-independent, so each radicand group
  // vanishes on its own. Within a group, units from up to three distinct
  // imaginary fields are multiplicatively independent modulo torsion.
  std::map<Integer, std::vector<Integer>> fields_by_m;
  for (const auto& t : merged.terms()) {
    if (t.angle.rationality() == AngleRationality::undetermined) continue;
    fields_by_m[t.length.m()].push_back(t.angle.unit()->d());
  }
  for (const auto& [m, fields] : fields_by_m)
    if (fields.size() <= 3) return ZeroStatus::nonzero;
  return ZeroStatus::undetermined;
}

bool tensors_equal(const DehnTensor& a, const DehnTensor& b) { return (a - b).zero_status() == ZeroStatus::zero; }

DehnTensor dehn_invariant(const PyramidSpec& spec) {
  int n = spec.n();
  Rational h2 = spec.h_squared();
  BaseTrig bt = base_trig(n);
  DihedralCosines dc = dihedral_cosines(n, h2);
  std::vector<DehnTerm> terms;
  terms.push_back({SurdLength::sqrt_of(bt.sin_sq), Angle::arg_of(unit_from_cosine(dc.cos_2theta)), n});
  terms.push_back({SurdLength::sqrt_of(Rational(1) + h2), Angle::arg_of(unit_from_cosine(dc.cos_phi)), n});
  return merge_with_integer_weights(DehnTensor::from_terms(std::move(terms)));
}

}  // namespace symdehn
