#include <algorithm>

#include "symdehn/dehn.hpp"
#include "symdehn/kummer.hpp"

namespace symdehn {

std::string to_string(Verdict v) { return v == Verdict::trivial ? "trivial" : "nontrivial"; }

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::case_a_hit: return "case_a_hit";
    case ObstructionKind::v_irrational: return "v_irrational";
    case ObstructionKind::b_mod4: return "b_mod4";
    case ObstructionKind::unity_constraint: return "unity_constraint";
    case ObstructionKind::norm_equation_fails: return "norm_equation_fails";
    case ObstructionKind::pi_not_root_of_unity: return "pi_not_root_of_unity";
    case ObstructionKind::hexagonal_unit_elimination: return "hexagonal_unit_elimination";
    case ObstructionKind::flat_degenerate: return "flat_degenerate";
  }
  return "unknown";
}

namespace {

bool contains_pair(const std::vector<NormEquationSolution>& list, const Integer& a, const Integer& b) {
  return std::any_of(list.begin(), list.end(), [&](const NormEquationSolution& s) { return s.a == a && s.b == b; });
}

void check_listed(bool found, bool listed, const std::string& what) {
  if (found != listed)
    throw InternalConsistencyError(what + ": direct test and closed-form list disagree");
}

struct NormStep {
  std::optional<NormEquationSolution> solution;
  std::optional<EliminationCertificate> certificate;
  std::optional<Obstruction> obstruction;
  std::string evidence;
};

NormStep norm_step(int n, std::int64_t a64, std::int64_t b64) {
  Integer a(static_cast<long>(a64)), b(static_cast<long>(b64));
  unsigned long bu = static_cast<unsigned long>(b64);
  NormStep out;
  if (n == 4) {
    out.solution = norm_equation_member(a, b);
    check_listed(out.solution.has_value(), contains_pair(solve_prop10(std::max(bu, 2ul)), a, b), "square base");
  } else if (n == 3) {
    out.solution = triangular_member(a, b);
    TriangularCandidates c = triangular_enumerate();
    check_listed(out.solution.has_value(), contains_pair(a % 3 == 0 ? c.a_div3 : c.a_not_div3, a, b),
                 "triangular base");
  } else {
    Integer q = b * b - a * a;
    Integer r = q * q;
    strip_factor(r, 2);
    unsigned long l = strip_factor(r, 3);
    if (l == 0) {
      out.solution = norm_equation_member(a, b);
      std::vector<NormEquationSolution> list = solve_prop10(std::max(bu, 2ul));
      std::erase_if(list, [](const NormEquationSolution& s) { return !(2 * s.a < s.b); });
      check_listed(out.solution.has_value(), contains_pair(list, a, b), "hexagonal base, 3 does not divide b^2 - a^2");
    } else if (r == 1) {
      auto member = hexagonal_family_member(a, b);
      if (!member) throw InternalConsistencyError("hexagonal family classification misses " + a.get_str() + "/" + b.get_str());
      out.certificate = hexagonal_eliminate(*member);
      out.solution = member;
      out.obstruction = Obstruction{ObstructionKind::hexagonal_unit_elimination,
                                    "family member " + member->str() + " eliminated, N(z) = " +
                                        out.certificate->norm_z.get_str(),
                                    std::nullopt};
      out.evidence = "norm equation: " + member->str() + " (eliminated)";
      return out;
    } else if (exact_root(r, bu)) {
      throw InternalConsistencyError("hexagonal base: odd part beyond 3 is a b-th power for " + a.get_str() + "/" +
                                     b.get_str());
    }
  }
  if (out.solution) {
    out.evidence = "norm equation: " + out.solution->str();
  } else {
    out.obstruction = Obstruction{ObstructionKind::norm_equation_fails,
                                  "(b^2 - a^2)^2 has no admissible 2^k 3^l n^b shape", std::nullopt};
    out.evidence = "norm equation: no solution";
  }
  return out;
}

}  // namespace

TrivialityReport triviality_verdict(const PyramidSpec& spec, bool verbose) {
  const int n = spec.n();
  TrivialityReport rep{spec, Verdict::nontrivial, {}, {}, std::nullopt, std::nullopt, std::nullopt};
  auto add = [&](Obstruction o) {
    if (verbose || rep.chain.empty()) rep.chain.push_back(std::move(o));
  };
  Rational h2 = spec.h_squared();
  DihedralCosines dc = dihedral_cosines(n, h2);
  rep.evidence.push_back("cos(2 theta) = " + dc.cos_2theta.str() + ", cos(phi) = " + dc.cos_phi.str());

  auto x = niven_angle_with_cosine(dc.cos_2theta);
  auto y = niven_angle_with_cosine(dc.cos_phi);
  bool case_a = false;
  if (x && y) {
    RationalDihedralAngles hit{x->half(), *y};
    auto sols = rational_case_solutions(n);
    if (std::find(sols.begin(), sols.end(), hit) == sols.end())
      throw InternalConsistencyError("rational dihedral angles outside the solved list for " + spec.str());
    case_a = true;
    rep.verdict = Verdict::trivial;
    add({ObstructionKind::case_a_hit, "theta = " + hit.theta.str() + ", phi = " + hit.phi.str(), std::nullopt});
    rep.evidence.push_back("theta = " + hit.theta.str() + ", phi = " + hit.phi.str() + " both rational");
  } else {
    rep.evidence.push_back(std::string("theta ") + (x ? "rational" : "irrational") + ", phi " +
                           (y ? "rational" : "irrational"));
  }

  std::optional<Rational> v = case_a ? std::nullopt : spec.v();
  if (!case_a && !v) {
    add({ObstructionKind::v_irrational, "v^2 = sin^2(pi/n)/(1 + h^2) is not a rational square", std::nullopt});
    rep.evidence.push_back("v irrational: lengths sin(pi/n) and sqrt(1 + h^2) are Q-independent");
  }

  if (v) {
    if (!v->num().fits_slong_p() || !v->den().fits_slong_p()) throw ResourceError("v = a/b exceeds 64-bit range");
    std::int64_t a = v->num().get_si(), b = v->den().get_si();
    rep.evidence.push_back("v = " + v->str());

    AdmissibilityVerdict adm = admissible_b(n, a, b);
    for (const auto& note : adm.notes) rep.evidence.push_back(note);
    if (!adm.admissible) {
      ObstructionKind kind = adm.reason == AdmissibilityReason::b_multiple_of_4 ? ObstructionKind::b_mod4
                                                                                 : ObstructionKind::unity_constraint;
      add({kind, to_string(adm.reason), std::nullopt});
    }

    if (verbose || rep.chain.empty()) {
      NormStep ns = norm_step(n, a, b);
      rep.evidence.push_back(ns.evidence);
      rep.norm_solution = ns.solution;
      rep.certificate = ns.certificate;
      if (ns.obstruction) add(*ns.obstruction);
    }

    if (verbose || rep.chain.empty()) {
      QuadElem pi = pi_product(n, a, b);
      if (is_root_of_unity(pi))
        throw InternalConsistencyError("alpha^a exp(i phi)^b is a root of unity for " + spec.str());
      add({ObstructionKind::pi_not_root_of_unity, "alpha^a exp(i phi)^b is not a root of unity", pi});
      rep.evidence.push_back("pi product = " + pi.str());
    }
  }

  DehnTensor inv = dehn_invariant(spec);
  ZeroStatus status = inv.zero_status();
  rep.invariant = inv;
  rep.evidence.push_back("Dehn invariant: " + inv.str() + " [" + to_string(status) + "]");
  bool trivial = rep.verdict == Verdict::trivial;
  if ((trivial && status != ZeroStatus::zero) || (!trivial && status != ZeroStatus::nonzero))
    throw InternalConsistencyError("verdict " + to_string(rep.verdict) + " disagrees with tensor status " +
                                   to_string(status) + " for " + spec.str());
  if (rep.chain.empty()) throw InternalConsistencyError("verdict reached with an empty obstruction chain");
  return rep;
}

}  // namespace symdehn
