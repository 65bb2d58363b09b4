#include <map>
#include <set>

#include "symdehn/dehn.hpp"

namespace symdehn {

namespace {

// Prime factors of n; nullopt when a composite cofactor survives trial division.
std::optional<std::vector<Integer>> prime_factors(Integer n) {
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= n; ++p) {
    if (strip_factor(n, p)) out.emplace_back(p);
  }
  if (n == 1) return out;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return std::nullopt;
  out.push_back(n);
  return out;
}

unsigned long valuation(Integer n, const Integer& p) {
  if (n == 0) throw InternalConsistencyError("valuation of zero");
  unsigned long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer powm(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer invert(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw InternalConsistencyError("no inverse");
  return r;
}

// Tonelli-Shanks: x with x^2 = d mod p, d a nonzero square mod the odd prime p.
Integer sqrt_mod_prime(const Integer& d, const Integer& p) {
  Integer a = mod(d, p);
  Integer q = p - 1;
  unsigned long s = strip_factor(q, 2);
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powm(z, q, p);
  Integer x = powm(a, (q + 1) / 2, p);
  Integer t = powm(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = powm(c, ipow(Integer(2), m - i - 1), p);
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

// r with r^2 = d mod p^K, for p split in Q(sqrt d).
Integer sqrt_mod_prime_power(const Integer& d, const Integer& p, unsigned long K) {
  Integer pk = ipow(p, K);
  if (p == 2) {
    Integer r = 1;
    for (unsigned long j = 3; j <= K; ++j) {
      Integer mj = ipow(Integer(2), j);
      if (mod(r * r - d, mj) != 0) r += ipow(Integer(2), j - 2);
    }
    return mod(r, pk);
  }
  Integer r = sqrt_mod_prime(d, p);
  for (Integer prec = p; prec < pk;) {
    prec = prec * prec;
    if (prec > pk) prec = pk;
    r = mod(r - (r * r - d) * invert(2 * r, prec), prec);
  }
  return r;
}

bool splits(const Integer& d, const Integer& p) {
  if (p == 2) return mod(d, 8) == 1;
  return mpz_legendre(mod(d, p).get_mpz_t(), p.get_mpz_t()) == 1;
}

struct UnitData {
  Integer A, B, C;  // z = (A + B sqrt d)/C
};

UnitData integral_form(const QuadElem& z) {
  Integer C = lcm(z.x().den(), z.y().den());
  return {z.x().num() * (C / z.x().den()), z.y().num() * (C / z.y().den()), C};
}

// v_P(z) for the prime P above p on which sqrt d maps to the chosen p-adic root.
long split_valuation(const QuadElem& z, const Integer& p) {
  UnitData u = integral_form(z);
  unsigned long vc = valuation(u.C, p);
  unsigned long K = 2 * vc + 3;
  Integer pk = ipow(p, K);
  Integer r = sqrt_mod_prime_power(z.d(), p, K);
  Integer g = mod(u.A + u.B * r, pk);
  if (g == 0) throw InternalConsistencyError("split_valuation: insufficient p-adic precision");
  return static_cast<long>(valuation(g, p)) - static_cast<long>(vc);
}

unsigned rank_of(std::vector<std::vector<Rational>> rows) {
  unsigned rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

struct Factor {
  QuadElem z;
  Integer weight;
};

}  // namespace

ComplexityBounds complexity(const DehnTensor& t) {
  DehnTensor merged = merge_with_integer_weights(t);
  if (merged.is_canonical_zero()) return {0, 0};

  // One row per radicand: the group is (sqrt m / Q) (x) sum of n_j arg(z_j).
  std::map<Integer, std::vector<Factor>> groups;
  {
    std::map<Integer, std::vector<DehnTerm>> by_m;
    for (const auto& term : merged.terms()) by_m[term.length.m()].push_back(term);
    for (auto& [m, terms] : by_m) {
      Integer Q = 1;
      for (const auto& term : terms) Q = lcm(Q, term.coefficient().den());
      for (const auto& term : terms) {
        if (!term.angle.unit()) throw InternalConsistencyError("complexity: undecided angle in merged tensor");
        groups[m].push_back({*term.angle.unit(), (term.coefficient() * Rational(Q)).num()});
      }
    }
  }
  const unsigned group_count = static_cast<unsigned>(groups.size());
  ComplexityBounds fallback{merged.zero_status() == ZeroStatus::nonzero ? 1u : 0u, group_count};

  std::set<Integer> fields;
  std::map<std::pair<Integer, Integer>, std::size_t> column;  // (d, p)
  for (const auto& [m, factors] : groups) {
    for (const auto& f : factors) {
      fields.insert(f.z.d());
      auto primes = prime_factors(integral_form(f.z).C);
      if (!primes) return fallback;
      for (const auto& p : *primes)
        if (splits(f.z.d(), p)) column.try_emplace({f.z.d(), p}, column.size());
    }
  }

  std::vector<std::vector<Rational>> rows;
  for (const auto& [m, factors] : groups) {
    std::vector<Rational> row(column.size());
    for (const auto& f : factors) {
      for (const auto& [key, idx] : column) {
        if (key.first != f.z.d()) continue;
        row[idx] += Rational(f.weight) * Rational(split_valuation(f.z, key.second));
      }
    }
    rows.push_back(std::move(row));
  }
  unsigned rank = rank_of(std::move(rows));
  if (rank == 0) throw InternalConsistencyError("complexity: nonzero merged tensor with zero valuation rank");
  // With four or more imaginary fields the compositum can drop degree, so the
  // valuation rank only bounds the complexity from above.
  if (fields.size() >= 4) return {fallback.lower, std::min(rank, group_count)};
  return {rank, rank};
}

AngleRatioHypothesis dehn_under_angle_ratio(const PyramidSpec& spec, const Rational& r) {
  if (r.sign() <= 0) throw DomainError("angle ratio must be positive");
  int n = spec.n();
  Rational h2 = spec.h_squared();
  SurdLength s = SurdLength::sqrt_of(base_trig(n).sin_sq);
  SurdLength l = SurdLength::sqrt_of(Rational(1) + h2);
  std::vector<std::pair<Rational, Integer>> terms;
  terms.emplace_back(Rational(2 * n) * s.r(), s.m());
  Rational c2 = Rational(n) * r * l.r();
  if (l.m() == s.m()) {
    terms.front().first += c2;
  } else {
    terms.emplace_back(c2, l.m());
  }
  Angle two_theta = Angle::arg_of(unit_from_cosine(dihedral_cosines(n, h2).cos_2theta));
  unsigned k = two_theta.rationality() == AngleRationality::known_rational ? 0 : 1;
  return {terms, two_theta, {k, k}};
}

}  // namespace symdehn
