#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "symdehn/cyclo.hpp"

namespace symdehn {

const std::vector<RationalAngle>& niven_angles() {
  static const std::vector<RationalAngle> angles{RationalAngle(1, 3), RationalAngle(1, 2), RationalAngle(2, 3)};
  return angles;
}

std::optional<RationalAngle> niven_angle_with_cosine(const Rational& c) {
  if (c == Rational(1, 2)) return RationalAngle(1, 3);
  if (c.is_zero()) return RationalAngle(1, 2);
  if (c == Rational(-1, 2)) return RationalAngle(2, 3);
  return std::nullopt;
}

std::vector<RationalAngle> angles_up_to(unsigned long q_max) {
  std::vector<RationalAngle> out;
  for (std::int64_t q = 2; q <= static_cast<std::int64_t>(q_max); ++q)
    for (std::int64_t p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Rational niven_cos(const RationalAngle& a) {
  if (a == RationalAngle(1, 3)) return Rational(1, 2);
  if (a == RationalAngle(1, 2)) return Rational(0);
  return Rational(-1, 2);
}

// cos(k*pi/5), k = 1..4, in Q(sqrt 5)
QuadElem golden_cos(std::int64_t k) {
  const QuadField f = QuadField::of(5);
  QuadElem c1(f, Rational(1, 4), Rational(1, 4));
  QuadElem c2(f, Rational(-1, 4), Rational(1, 4));
  switch (k) {
    case 1: return c1;
    case 2: return c2;
    case 3: return -c2;
    default: return -c1;
  }
}

}  // namespace

TwoCosineSolutions solve_two_cosine_relation(const Rational& A, const Rational& B, const Rational& C) {
  if (A.is_zero() && B.is_zero()) throw DomainError("two-cosine relation needs A != 0 or B != 0");
  TwoCosineSolutions out;
  if (B.is_zero() || A.is_zero()) {
    int slot = B.is_zero() ? 0 : 1;
    Rational c = C / (slot == 0 ? A : B);
    if (auto t = niven_angle_with_cosine(c)) out.one_cosine.push_back({slot, *t});
    return out;
  }
  // Both cosines rational: Niven values only.
  for (const auto& x : niven_angles())
    for (const auto& y : niven_angles())
      if (A * niven_cos(x) + B * niven_cos(y) == C) out.pairs.push_back({x, y});
  out.literal_pairs = out.pairs;

  // Both irrational. On the diagonals y = x and y = pi - x the relation collapses
  // to a one-cosine relation, which needs a vanishing coefficient and C = 0.
  if (C.is_zero() && (A + B).is_zero()) out.diagonal.push_back(DiagonalFamily::equal);
  if (C.is_zero() && (A - B).is_zero()) out.diagonal.push_back(DiagonalFamily::supplementary);
  // Off the diagonals the only relation is cos(pi/5) - cos(2pi/5) = 1/2 after folding.
  for (std::int64_t i = 1; i <= 4; ++i) {
    for (std::int64_t j = 1; j <= 4; ++j) {
      if (i == j || i + j == 5) continue;
      QuadElem lhs = golden_cos(i) * A + golden_cos(j) * B;
      if (lhs == QuadElem(TowerElem::base(), C)) out.pairs.push_back({RationalAngle(i, 5), RationalAngle(j, 5)});
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::vector<AnglePair> TwoCosineSolutions::expand(unsigned long q_max) const {
  std::set<AnglePair> out;
  auto fits = [&](const RationalAngle& a) { return static_cast<unsigned long>(a.q()) <= q_max; };
  for (const auto& p : pairs)
    if (fits(p.x) && fits(p.y)) out.insert(p);
  if (!one_cosine.empty() || !diagonal.empty()) {
    auto all = angles_up_to(q_max);
    for (const auto& fam : one_cosine) {
      if (!fits(fam.fixed)) continue;
      for (const auto& t : all) out.insert(fam.fixed_slot == 0 ? AnglePair{fam.fixed, t} : AnglePair{t, fam.fixed});
    }
    for (auto kind : diagonal)
      for (const auto& t : all) out.insert({t, kind == DiagonalFamily::equal ? t : t.supplement()});
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------

namespace {

// Q(cos x) is determined by the order n of exp(ix): it is Q for n in {1,2,3,4,6}
// and otherwise the real subfield of Q(zeta_c), c = n or n/2 for n = 2 mod 4.
unsigned long real_field_key(unsigned long n) {
  if (euler_phi(n) <= 2) return 0;
  return n % 4 == 2 ? n / 2 : n;
}

unsigned long bucket_conductor(unsigned long key) {
  if (key == 0) return 12;
  return key % 2 ? 2 * key : key;
}

}  // namespace

std::vector<AnglePair> oracle_two_cosine(const Rational& A, const Rational& B, const Rational& C,
                                         unsigned long q_max, OracleOptions options) {
  if (q_max < 2) throw DomainError("oracle_two_cosine needs q_max >= 2");
  if (A.is_zero() && B.is_zero()) throw DomainError("two-cosine relation needs A != 0 or B != 0");
  unsigned long cap = options.conductor_cap ? options.conductor_cap : 4 * q_max;
  auto all = angles_up_to(q_max);
  std::vector<AnglePair> out;

  if (A.is_zero() || B.is_zero()) {
    const Rational& coef = A.is_zero() ? B : A;
    for (const auto& t : all) {
      unsigned long m = 2 * static_cast<unsigned long>(t.q());
      if (m > cap) throw ResourceError("oracle conductor " + std::to_string(m) + " exceeds cap");
      if (cos_as_cyclo(t) * coef == CycloElem::constant(CyclotomicField::make(m), C)) {
        for (const auto& u : all) out.push_back(A.is_zero() ? AnglePair{u, t} : AnglePair{t, u});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // A cos x + B cos y = C with AB != 0 forces Q(cos x) = Q(cos y), so only
  // angles in the same bucket can pair up.
  std::map<unsigned long, std::vector<RationalAngle>> buckets;
  for (const auto& t : all) buckets[real_field_key(t.order())].push_back(t);
  Rational inv_b = B.inverse();
  for (const auto& [key, members] : buckets) {
    unsigned long L = bucket_conductor(key);
    if (L > cap) throw ResourceError("oracle conductor " + std::to_string(L) + " exceeds cap");
    auto field = CyclotomicField::make(L);
    std::map<std::vector<Rational>, RationalAngle> by_cos;
    std::vector<CycloElem> cosines;
    cosines.reserve(members.size());
    for (const auto& t : members) {
      cosines.push_back(cos_as_cyclo(t, field));
      by_cos.emplace(cosines.back().coeffs(), t);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      CycloElem target = (cosines[i] * (-A) + C) * inv_b;
      auto hit = by_cos.find(target.coeffs());
      if (hit != by_cos.end()) out.push_back({members[i], hit->second});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symdehn
