#pragma once

#include <stdexcept>
#include <string>

namespace symdehn {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Arithmetic between irrational elements of two different quadratic fields.
class MixedFieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (rationals, quadratic values, reports).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A bounded computation would exceed its configured limit.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed. Always a bug.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace symdehn
