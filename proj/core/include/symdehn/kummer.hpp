#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdehn/exactnum.hpp"

namespace symdehn {

// The field of alpha contains roots of unity of order dividing N other than +-1.
class UnityContentError : public DomainError {
public:
  using DomainError::DomainError;
};

struct UnityContent {
  QuadField field;
  int group_order;  // 2, 4 or 6
};

UnityContent roots_of_unity_in(const QuadField& field);
// Q(i sqrt D), D squarefree positive.
UnityContent roots_of_unity_in(const Integer& D);
// Every root of unity of the field, listed explicitly.
std::vector<QuadElem> roots_of_unity(const QuadField& field);
bool is_root_of_unity(const QuadElem& z);

struct Prop8Result {
  bool alpha_is_square;
  std::optional<bool> minus_alpha_is_square;  // decided only when alpha is not a square
};

// alpha = (epsilon / sqrt(d))^2 with epsilon in Q(i sqrt D) non-real and d > 0.
Prop8Result prop8_tests(const QuadElem& epsilon, const Rational& d);

// alpha is not a square and -4 alpha is not a fourth power.
bool check_A1(const QuadElem& alpha);
bool is_fourth_power(const QuadElem& x);

// field meets Q(mu_{2^exponent}) only in Q.
bool check_A2(unsigned exponent, const QuadField& field);

struct PowerTestResult {
  bool is_power;
  std::optional<QuadElem> witness;  // witness^N = alpha
};

struct PowerTestOptions {
  Integer max_candidates = Integer(10000000);
};

// alpha in E^N for an imaginary quadratic field E (or alpha rational, searched in its field).
PowerTestResult nth_power_test(const QuadElem& alpha, unsigned long N, const PowerTestOptions& options = {});

enum class Lemma3Condition {
  unconditionally_abelian,
  alpha_is_nth_power,
  alpha_is_half_nth_power,
  alpha_is_minus_lambda_to_half_n,
  preconditions_not_met,
};

std::string to_string(Lemma3Condition c);

Lemma3Condition lemma3_condition(const QuadElem& alpha, unsigned long N);

struct Lemma3Evaluation {
  Lemma3Condition condition;
  std::optional<bool> holds;
  std::optional<QuadElem> witness;  // lambda of the condition
};

Lemma3Evaluation evaluate_lemma3(const QuadElem& alpha, unsigned long N);

enum class AdmissibilityReason { ok, b_multiple_of_4, unity_constraint_violated };

std::string to_string(AdmissibilityReason r);

struct AdmissibilityVerdict {
  bool admissible;
  AdmissibilityReason reason;
  UnityContent unity;
  std::vector<std::string> notes;
};

AdmissibilityVerdict admissible_b(int n, std::int64_t a, std::int64_t b);

}  // namespace symdehn
