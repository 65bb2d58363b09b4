#include "symdehn/diophantine.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace symdehn {

std::string to_string(SolutionFamily f) {
  switch (f) {
    case SolutionFamily::regular: return "regular";
    case SolutionFamily::two_power_pair: return "two_power_pair";
    case SolutionFamily::triangular_extra: return "triangular_extra";
    case SolutionFamily::hex_f1: return "hex_F1";
    case SolutionFamily::hex_f2: return "hex_F2";
  }
  return "unknown";
}

NormEquationSolution NormEquationSolution::make(Integer a, Integer b, unsigned long k, unsigned long l, Integer n_odd,
                                                unsigned lhs_factor, SolutionFamily family, unsigned long s,
                                                unsigned long d) {
  NormEquationSolution sol{std::move(a), std::move(b), k, l, std::move(n_odd), lhs_factor, family, s, d};
  if (sol.a < 1 || sol.a >= sol.b || gcd(sol.a, sol.b) != 1)
    throw InternalConsistencyError("norm solution needs coprime 1 <= a < b: " + sol.str());
  if (!sol.identity_holds()) throw InternalConsistencyError("norm identity fails for " + sol.str());
  return sol;
}

bool NormEquationSolution::identity_holds() const {
  if (n_odd < 1 || n_odd % 2 == 0) return false;
  if (!b.fits_ulong_p()) return false;
  Integer q = b * b - a * a;
  Integer lhs = Integer(lhs_factor) * q * q;
  Integer rhs = ipow(Integer(2), k) * ipow(Integer(3), l) * ipow(n_odd, b.get_ui());
  return lhs == rhs;
}

std::string NormEquationSolution::str() const {
  std::string out = "(" + a.get_str() + ", " + b.get_str() + ")";
  std::string lhs = lhs_factor == 1 ? "" : std::to_string(lhs_factor) + "*";
  out += " " + lhs + "(b^2-a^2)^2 = 2^" + std::to_string(k);
  if (l) out += " * 3^" + std::to_string(l);
  out += " * " + n_odd.get_str() + "^" + b.get_str();
  out += " [" + to_string(family);
  if (family == SolutionFamily::two_power_pair) out += " s=" + std::to_string(s);
  if (family == SolutionFamily::hex_f1 || family == SolutionFamily::hex_f2)
    out += " s=" + std::to_string(s) + " d=" + std::to_string(d);
  return out + "]";
}

bool pair_less(const NormEquationSolution& x, const NormEquationSolution& y) {
  if (x.b != y.b) return x.b < y.b;
  return x.a < y.a;
}

std::vector<unsigned> gcd_prime_support(int n) {
  if (n == 4) return {2};
  if (n == 3 || n == 6) return {2, 3};
  throw DomainError("gcd_prime_support: n must be 3, 4 or 6");
}

namespace {

void sort_solutions(std::vector<NormEquationSolution>& v) { std::sort(v.begin(), v.end(), pair_less); }

// 2^s + 1 = b, when b has that shape.
std::optional<unsigned long> two_power_index(const Integer& b) {
  Integer t = b - 1;
  if (t < 2) return std::nullopt;
  unsigned long s = strip_factor(t, 2);
  if (t != 1) return std::nullopt;
  return s;
}

}  // namespace

std::optional<NormEquationSolution> norm_equation_member(const Integer& a, const Integer& b) {
  if (a < 1 || a >= b || gcd(a, b) != 1 || !b.fits_ulong_p()) return std::nullopt;
  Integer q = b * b - a * a;
  Integer r = q * q;
  unsigned long k = strip_factor(r, 2);
  auto n = exact_root(r, b.get_ui());
  if (!n) return std::nullopt;
  if (*n == 1) {
    auto s = two_power_index(b);
    if (!s || a != b - 2) throw InternalConsistencyError("pure power of two outside the (2^s - 1, 2^s + 1) family");
    return NormEquationSolution::make(a, b, k, 0, 1, 1, SolutionFamily::two_power_pair, *s);
  }
  return NormEquationSolution::make(a, b, k, 0, *n, 1, SolutionFamily::regular);
}

std::vector<NormEquationSolution> solve_prop10(unsigned long b_max) {
  if (b_max < 2) throw DomainError("solve_prop10 needs b_max >= 2");
  std::vector<NormEquationSolution> out;
  // n = 1: b - a and b + a are powers of two
  for (unsigned long s = 1;; ++s) {
    Integer p = ipow(Integer(2), s);
    Integer b = p + 1;
    if (b > b_max) break;
    out.push_back(NormEquationSolution::make(p - 1, b, 2 * s + 4, 0, 1, 1, SolutionFamily::two_power_pair, s));
  }
  // n >= 3: 3^b <= (b^2 - a^2)^2 <= b^4 forces b <= 7
  unsigned long scan = std::min<unsigned long>(7, b_max);
  for (unsigned long b = 2; b <= scan; ++b) {
    for (unsigned long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      Integer q = Integer(b) * b - Integer(a) * a;
      Integer r = q * q;
      unsigned long k = strip_factor(r, 2);
      if (r < 3) continue;
      if (auto n = exact_root(r, b)) out.push_back(NormEquationSolution::make(a, b, k, 0, *n, 1, SolutionFamily::regular));
    }
  }
  sort_solutions(out);
  return out;
}

std::vector<NormEquationSolution> oracle_norm_equation(unsigned long b_max) {
  if (b_max < 2) throw DomainError("oracle_norm_equation needs b_max >= 2");
  std::vector<NormEquationSolution> out;
  for (unsigned long b = 2; b <= b_max; ++b)
    for (unsigned long a = 1; a < b; ++a)
      if (auto sol = norm_equation_member(Integer(a), Integer(b))) out.push_back(*sol);
  sort_solutions(out);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<NormEquationSolution> triangular_member(const Integer& a, const Integer& b) {
  if (a < 1 || a >= b || gcd(a, b) != 1 || !b.fits_ulong_p()) return std::nullopt;
  if (a % 3 == 0) {
    // 3 divides a but not b, so the 3-part of 9(b^2 - a^2)^2 is exactly 9
    auto sol = norm_equation_member(a, b);
    if (!sol) return std::nullopt;
    return sol;
  }
  Integer q = b * b - a * a;
  Integer r = 9 * q * q;
  unsigned long k = strip_factor(r, 2);
  auto n = exact_root(r, b.get_ui());
  if (!n) return std::nullopt;
  return NormEquationSolution::make(a, b, k, 0, *n, 9, SolutionFamily::triangular_extra);
}

TriangularCandidates triangular_enumerate() {
  TriangularCandidates out;
  // 3^b <= 9(b^2 - a^2)^2 < 9 b^4 forces b <= 10
  for (long b = 2; b <= 10; ++b) {
    for (long a = 1; a < b; ++a) {
      if (a % 3 == 0 || std::gcd(a, b) != 1) continue;
      if (!(4 * a * a < 3 * b * b)) continue;
      if (auto sol = triangular_member(Integer(a), Integer(b))) out.a_not_div3.push_back(*sol);
    }
  }
  // a = 0 mod 3: the square-base solutions with a < (sqrt 3 / 2) b. Along the
  // (2^s - 1, 2^s + 1) family a/b increases, so the scan stops at the first failure.
  for (unsigned long s = 1;; ++s) {
    Integer p = ipow(Integer(2), s);
    Integer a = p - 1;
    Integer b = p + 1;
    if (!(4 * a * a < 3 * b * b)) break;
    if (a % 3 == 0) out.a_div3.push_back(NormEquationSolution::make(a, b, 2 * s + 4, 0, 1, 1, SolutionFamily::two_power_pair, s));
  }
  // the regular solution (1, 2) has a = 1, so it never lands in this case
  sort_solutions(out.a_not_div3);
  sort_solutions(out.a_div3);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<NormEquationSolution> family_solution(unsigned long s, unsigned long d) {
  Integer p3 = ipow(Integer(3), s);
  Integer p2 = ipow(Integer(2), d);
  Integer b = p3 + p2;
  Integer a;
  SolutionFamily fam;
  if (p2 < p3 && p3 < 3 * p2) {
    a = p3 - p2;
    fam = SolutionFamily::hex_f1;
  } else if (p3 < p2 && p2 < 3 * p3) {
    a = p2 - p3;
    fam = SolutionFamily::hex_f2;
  } else {
    return std::nullopt;
  }
  if (gcd(a, b) != 1 || !(2 * a < b)) throw InternalConsistencyError("hexagonal family member violates its constraints");
  // b^2 - a^2 = 2^K 3^L with K, L read off by factoring, not assumed
  Integer q = b * b - a * a;
  Integer r = q * q;
  unsigned long k = strip_factor(r, 2);
  unsigned long l = strip_factor(r, 3);
  if (r != 1 || k % 2 || l % 2 || k != 2 * d + 4 || l != 2 * s)
    throw InternalConsistencyError("hexagonal family member has unexpected norm factorization");
  return NormEquationSolution::make(a, b, k, l, 1, 1, fam, s, d);
}

}  // namespace

std::vector<NormEquationSolution> hexagonal_families(unsigned long s_max, unsigned long d_max) {
  if (s_max < 1 || d_max < 1) throw DomainError("hexagonal_families needs s_max, d_max >= 1");
  std::vector<NormEquationSolution> out;
  for (unsigned long s = 1; s <= s_max; ++s)
    for (unsigned long d = 1; d <= d_max; ++d)
      if (auto sol = family_solution(s, d)) out.push_back(*sol);
  sort_solutions(out);
  return out;
}

std::optional<NormEquationSolution> hexagonal_family_member(const Integer& a, const Integer& b) {
  if (a < 1 || !(2 * a < b) || gcd(a, b) != 1) return std::nullopt;
  Integer q = b * b - a * a;
  unsigned long K = strip_factor(q, 2);
  unsigned long L = strip_factor(q, 3);
  if (q != 1 || L == 0 || K < 3) return std::nullopt;
  auto sol = family_solution(L, K - 2);
  if (!sol || sol->a != a || sol->b != b) return std::nullopt;
  return sol;
}

EliminationCertificate hexagonal_eliminate(const NormEquationSolution& m) {
  if (m.family != SolutionFamily::hex_f1 && m.family != SolutionFamily::hex_f2)
    throw DomainError("hexagonal_eliminate needs a hexagonal family member");
  const Integer& a = m.a;
  const Integer& b = m.b;
  // N(z) for z = 7a^2 - b^2 + 2ai sqrt(3b^2 - 12a^2)
  Integer re = 7 * a * a - b * b;
  Integer norm = re * re + 4 * a * a * (3 * b * b - 12 * a * a);
  Integer expected = ipow(Integer(2), 2 * m.d + 4) * ipow(Integer(3), 2 * m.s);
  if (norm != expected) throw InternalConsistencyError("hexagonal_eliminate: N(z) != 2^(2d+4) 3^(2s) for " + m.str());
  EliminationCertificate cert{m, norm, b > Integer(m.d + 2), b > Integer(m.s), "unit_argument"};
  if (!cert.b_exceeds_d_plus_2 || !cert.b_exceeds_s)
    throw InternalConsistencyError("hexagonal_eliminate: elimination inequality fails for " + m.str());
  return cert;
}

std::vector<std::pair<Integer, Integer>> hexagonal_brute_force(unsigned long b_max) {
  std::vector<std::pair<Integer, Integer>> out;
  for (std::uint64_t b = 3; b <= b_max; ++b) {
    for (std::uint64_t a = 1; 2 * a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      std::uint64_t q = b * b - a * a;
      while (q % 2 == 0) q /= 2;
      if (q % 3) continue;
      while (q % 3 == 0) q /= 3;
      if (q == 1) out.emplace_back(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(b)));
    }
  }
  return out;
}

}  // namespace symdehn
