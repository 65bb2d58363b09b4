#pragma once

// Brute-force reference computations. None of these call into symdehn; they
// work on raw GMP values so that a bug in the library cannot hide itself.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

// x + y*sqrt(d) over Q, with plain schoolbook arithmetic.
struct Surd {
  mpq_class x;
  mpq_class y;
  long d;
};

inline Surd mul(const Surd& a, const Surd& b) {
  Surd r{a.x * b.x + a.d * a.y * b.y, a.x * b.y + a.y * b.x, a.d};
  r.x.canonicalize();
  r.y.canonicalize();
  return r;
}

inline Surd power(Surd base, unsigned e) {
  Surd r{1, 0, base.d};
  for (unsigned i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

inline bool same(const Surd& a, const Surd& b) { return a.x == b.x && a.y == b.y; }

// Largest m squarefree with n = k^2 m, by trial division over every prime factor.
inline mpz_class squarefree_part(mpz_class n) {
  mpz_class m = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) m *= p;
  }
  return m * n;
}

// x = y^k for some integer y >= 0, found by bisection.
inline bool is_kth_power(const mpz_class& x, unsigned k) {
  if (x < 0) return false;
  mpz_class lo = 0, hi = 1;
  auto pw = [k](const mpz_class& y) {
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) r *= y;
    return r;
  };
  while (pw(hi) < x) hi *= 2;
  while (lo <= hi) {
    mpz_class mid = (lo + hi) / 2;
    mpz_class v = pw(mid);
    if (v == x) return true;
    if (v < x)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return false;
}

// (b^2 - a^2)^2 = 2^k n^b, n odd: scan every odd n with n^b <= (b^2 - a^2)^2.
inline std::vector<std::pair<long, long>> norm_equation_pairs(long b_max) {
  std::vector<std::pair<long, long>> out;
  for (long b = 2; b <= b_max; ++b) {
    for (long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      mpz_class q = mpz_class(b) * b - mpz_class(a) * a;
      mpz_class r = q * q;
      while (r % 2 == 0) r /= 2;
      bool found = false;
      for (mpz_class n = 1;; n += 2) {
        mpz_class nb = 1;
        for (long i = 0; i < b && nb <= r; ++i) nb *= n;
        if (nb == r) found = true;
        if (nb >= r || found) break;
      }
      if (found) out.emplace_back(a, b);
    }
  }
  return out;
}

// The roots of unity of an imaginary quadratic field all satisfy z^12 = 1.
inline bool is_root_of_unity(const Surd& z) { return same(power(z, 12), Surd{1, 0, z.d}); }

}  // namespace oracle
