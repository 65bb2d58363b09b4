#pragma once

#include <cstdint>
#include <random>

#include "symdehn/exactnum.hpp"

namespace gen {

class Source {
public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  symdehn::Rational rational(long bound) {
    long den = integer(1, bound);
    return symdehn::Rational(symdehn::Integer(integer(-bound, bound)), symdehn::Integer(den));
  }

  symdehn::Rational positive_rational(long bound) {
    return symdehn::Rational(symdehn::Integer(integer(1, bound)), symdehn::Integer(integer(1, bound)));
  }

  // squarefree d != 0, 1 in [-bound, bound]
  symdehn::QuadField field(long bound) {
    for (;;) {
      long d = integer(-bound, bound);
      if (d == 0 || d == 1) continue;
      if (symdehn::is_squarefree(symdehn::Integer(d < 0 ? -d : d))) return symdehn::QuadField::of(d);
    }
  }

  symdehn::QuadElem element(const symdehn::QuadField& f, long bound) { return symdehn::QuadElem(f, rational(bound), rational(bound)); }

  bool coin() { return integer(0, 1) == 1; }

private:
  std::mt19937_64 rng_;
};

}  // namespace gen
