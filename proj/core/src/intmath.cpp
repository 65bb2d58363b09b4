#include "symdehn/exactnum.hpp"

#include <string>

namespace symdehn {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::optional<Integer> exact_root(const Integer& x, unsigned long k) {
  if (k == 0) throw DomainError("exact_root: zeroth root");
  if (x < 0 && k % 2 == 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

bool is_perfect_power(const Integer& x, unsigned long k) { return exact_root(x, k).has_value(); }

unsigned long strip_factor(Integer& n, unsigned long p) {
  if (n == 0) throw DomainError("strip_factor: zero has unbounded multiplicity");
  unsigned long count = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++count;
  }
  return count;
}

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
  if (n <= 0) throw DomainError("squarefree_split: nonpositive input");
  Integer rest = n;
  Integer s = 1;
  Integer m = 1;
  auto take = [&](unsigned long p) {
    unsigned long e = strip_factor(rest, p);
    if (e == 0) return;
    s *= ipow(Integer(p), e / 2);
    if (e % 2) m *= p;
  };
  take(2);
  take(3);
  // 6k +- 1 wheel; stop once p^3 exceeds what is left, so at most two primes remain.
  for (unsigned long p = 5, step = 2; ; p += step, step = 6 - step) {
    Integer p3 = Integer(p) * p * p;
    if (p3 > rest) break;
    take(p);
  }
  if (rest > 1) {
    Integer root;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      s *= root;
    } else {
      m *= rest;
    }
  }
  return {s, m};
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  Integer a = abs(n);
  return squarefree_split(a).first == 1;
}

Integer to_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace symdehn
