#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdehn/exactnum.hpp"

namespace symdehn {

enum class SolutionFamily { regular, two_power_pair, triangular_extra, hex_f1, hex_f2 };

std::string to_string(SolutionFamily f);

// lhs_factor * (b^2 - a^2)^2 = 2^k * 3^l * n_odd^b, checked on construction.
// For every family except the hexagonal ones l = 0; there n_odd = 1.
struct NormEquationSolution {
  Integer a;
  Integer b;
  unsigned long k = 0;
  unsigned long l = 0;
  Integer n_odd = 1;
  unsigned lhs_factor = 1;
  SolutionFamily family = SolutionFamily::regular;
  unsigned long s = 0;  // two_power_pair, hex families
  unsigned long d = 0;  // hex families

  static NormEquationSolution make(Integer a, Integer b, unsigned long k, unsigned long l, Integer n_odd,
                                   unsigned lhs_factor, SolutionFamily family, unsigned long s = 0,
                                   unsigned long d = 0);

  bool identity_holds() const;
  std::string str() const;
  friend bool operator==(const NormEquationSolution&, const NormEquationSolution&) = default;
};

// (a, b) ordering, used for canonical sorted output.
bool pair_less(const NormEquationSolution& x, const NormEquationSolution& y);

std::vector<unsigned> gcd_prime_support(int n);

// (b^2 - a^2)^2 = 2^k n^b with n odd, gcd(a, b) = 1, 1 <= a < b <= b_max.
std::vector<NormEquationSolution> solve_prop10(unsigned long b_max);
std::vector<NormEquationSolution> oracle_norm_equation(unsigned long b_max);

// Direct test of one pair against (b^2 - a^2)^2 = 2^k n^b.
std::optional<NormEquationSolution> norm_equation_member(const Integer& a, const Integer& b);

struct TriangularCandidates {
  std::vector<NormEquationSolution> a_not_div3;  // 9(b^2 - a^2)^2 = 2^k n^b
  std::vector<NormEquationSolution> a_div3;      // reduced to the square-base equation
};

TriangularCandidates triangular_enumerate();

// Direct test of one pair against the triangular equation for its congruence case.
std::optional<NormEquationSolution> triangular_member(const Integer& a, const Integer& b);

// Members of F1 = {(3^s - 2^d, 3^s + 2^d) : 2^d < 3^s < 3*2^d} and
// F2 = {(2^d - 3^s, 3^s + 2^d) : 3^s < 2^d < 3^(s+1)}, 1 <= s <= s_max, 1 <= d <= d_max.
std::vector<NormEquationSolution> hexagonal_families(unsigned long s_max, unsigned long d_max);

// Classifies (a, b) as a family member when b^2 - a^2 = 2^K 3^L with L >= 1.
std::optional<NormEquationSolution> hexagonal_family_member(const Integer& a, const Integer& b);

struct EliminationCertificate {
  NormEquationSolution member;
  Integer norm_z;
  bool b_exceeds_d_plus_2;
  bool b_exceeds_s;
  std::string contradiction;  // "unit_argument"
};

EliminationCertificate hexagonal_eliminate(const NormEquationSolution& member);

// All coprime (a, b), 2a < b <= b_max, with b^2 - a^2 = 2^K 3^L and L >= 1.
std::vector<std::pair<Integer, Integer>> hexagonal_brute_force(unsigned long b_max);

}  // namespace symdehn
