#include <functional>
#include <numeric>
#include <sstream>

#include "symdehn/symdehn.hpp"
#include "symdehn_cli/cli.hpp"

namespace symdehn::cli {

namespace {

QuadElem q(long d, const Rational& x, const Rational& y) { return QuadElem(QuadField::of(d), x, y); }

std::string pairs_text(const std::vector<NormEquationSolution>& v) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << "(" << v[i].a << "," << v[i].b << ")";
  s << "}";
  return s.str();
}

std::string angle_pairs_text(const std::vector<AnglePair>& v) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << "(" << v[i].x.str() << ", " << v[i].y.str() << ")";
  s << "}";
  return s.str();
}

PaperCheck equal_values(std::string name, const QuadElem& expected, const QuadElem& computed) {
  return {std::move(name), expected.str(), computed.str(), expected == computed};
}

PaperCheck equal_text(std::string name, std::string expected, std::string computed) {
  bool pass = expected == computed;
  return {std::move(name), std::move(expected), std::move(computed), pass};
}

PaperCheck zero_tensor(std::string name, const DehnTensor& t) {
  return {std::move(name), "0", t.is_canonical_zero() ? "0" : t.str(), t.is_canonical_zero()};
}

using CheckFn = std::function<std::vector<PaperCheck>()>;

std::vector<CheckFn> battery() {
  std::vector<CheckFn> b;
  b.push_back([] {
    return std::vector<PaperCheck>{
        equal_values("pi_product(4,1,2)", q(-2, Rational(-1, 3), Rational(2, 3)).pow(3), pi_product(4, 1, 2)),
        equal_values("pi_product(4,1,3)", q(-7, Rational(87, 256), Rational(91, 256)), pi_product(4, 1, 3)),
        equal_values("pi_product(4,3,5)", q(-7, Rational(-3617721, 4194304), Rational(802165, 4194304)),
                     pi_product(4, 3, 5))};
  });
  b.push_back([] {
    QuadElem e = q(-2, Rational(1, 3), Rational(2, 3));
    return std::vector<PaperCheck>{
        equal_values("exp(i phi_3) at v = 1/2", e, case_b_field_data(3, 1, 2).exp_phi),
        equal_values("pi_product(3,1,2)", e.pow(4), pi_product(3, 1, 2)),
        equal_values("pi_product(6,1,3)", q(-15, Rational(-1673, 2048), Rational(305, 2048)), pi_product(6, 1, 3))};
  });
  b.push_back([] {
    auto closed = solve_prop10(64);
    std::vector<NormEquationSolution> small;
    for (const auto& s : closed)
      if (s.b <= 10) small.push_back(s);
    return std::vector<PaperCheck>{
        equal_text("norm equation solutions b <= 10", "{(1,2), (1,3), (3,5), (7,9)}", pairs_text(small)),
        equal_text("closed form vs oracle b <= 64", pairs_text(oracle_norm_equation(64)), pairs_text(closed))};
  });
  b.push_back([] {
    auto t = triangular_enumerate();
    return std::vector<PaperCheck>{equal_text("triangular, 3 does not divide a", "{(1,2)}", pairs_text(t.a_not_div3)),
                                   equal_text("triangular, 3 divides a", "{(3,5)}", pairs_text(t.a_div3))};
  });
  b.push_back([] {
    std::ostringstream s4;
    for (const auto& r : rational_case_solutions(4)) s4 << "(" << r.theta.str() << ", " << r.phi.str() << ")";
    return std::vector<PaperCheck>{
        equal_text("rational dihedral angles n = 4", "(pi/4, 2*pi/3)", s4.str()),
        equal_text("rational dihedral angles n = 3, 6", "0 0",
                   std::to_string(rational_case_solutions(3).size()) + " " +
                       std::to_string(rational_case_solutions(6).size()))};
  });
  b.push_back([] {
    const unsigned long q_max = 24;
    return std::vector<PaperCheck>{
        equal_text("two-cosine oracle (1,2,-1)", "{(pi/2, 2*pi/3)}",
                   angle_pairs_text(oracle_two_cosine(Rational(1), Rational(2), Rational(-1), q_max))),
        equal_text("two-cosine oracle (3,4,-1)", "{}",
                   angle_pairs_text(oracle_two_cosine(Rational(3), Rational(4), Rational(-1), q_max))),
        equal_text("two-cosine oracle (1,4,-3)", "{}",
                   angle_pairs_text(oracle_two_cosine(Rational(1), Rational(4), Rational(-3), q_max)))};
  });
  b.push_back([] {
    auto members = hexagonal_families(3, 3);
    std::vector<NormEquationSolution> listed;
    bool certified = true;
    for (const auto& m : members) {
      listed.push_back(m);
      EliminationCertificate c = hexagonal_eliminate(m);
      certified = certified && c.b_exceeds_d_plus_2 && c.b_exceeds_s && c.contradiction == "unit_argument";
    }
    std::string got = pairs_text(listed);
    bool has = got.find("(1,5)") != std::string::npos && got.find("(1,7)") != std::string::npos;
    return std::vector<PaperCheck>{{"hexagonal families s, d <= 3", "contains (1,5) and (1,7), all eliminated",
                                    got + (certified ? " eliminated" : " NOT eliminated"), has && certified}};
  });
  b.push_back([] {
    TrivialityReport t = triviality_verdict(PyramidSpec::with_height_squared(4, Rational(1, 2)));
    TrivialityReport u = triviality_verdict(PyramidSpec::with_v(4, Rational(1, 3)));
    std::string u_text = to_string(u.verdict) + (u.chain.empty() ? "" : " " + to_string(u.chain.back().kind));
    return std::vector<PaperCheck>{equal_text("verdict P_4(h^2 = 1/2)", "trivial", to_string(t.verdict)),
                                   equal_text("verdict P_4(v = 1/3)", "nontrivial pi_not_root_of_unity", u_text)};
  });
  b.push_back([] {
    std::vector<PaperCheck> out;
    for (const RegularPyramid& p : regular_pyramids())
      out.push_back({"regular pyramid " + p.name + " edges", "1 + h^2 = c^2", p.edge_squared.str(), p.edges_agree()});
    return out;
  });
  b.push_back([] {
    GluingRecord r = verify_gluing_relations();
    return std::vector<PaperCheck>{zero_tensor("gluing: prism relation", r.prism),
                                   zero_tensor("gluing: scaled relation", r.scaled),
                                   zero_tensor("gluing: crystal relation", r.crystal),
                                   equal_text("gluing: crystal edges", "2 3",
                                              r.crystal_edge_k.str() + " " + r.crystal_edge_t.str())};
  });
  b.push_back([] {
    P5Check c = p5_check();
    return std::vector<PaperCheck>{
        {"P5: W relative norm", "1", c.w_norm.str(), c.w_norm.is_one()},
        {"P5: W equals displayed closed form squared", c.w_displayed.str(), c.w.str(), c.w == c.w_displayed},
        {"P5: W^60", "not 1", c.w60.str(), !c.w60_is_one && c.i4_is_one}};
  });
  return b;
}

}  // namespace

std::vector<PaperCheck> paper_checks() {
  std::vector<PaperCheck> out;
  int index = 0;
  for (const CheckFn& fn : battery()) {
    ++index;
    try {
      for (PaperCheck& c : fn()) out.push_back(std::move(c));
    } catch (const std::exception& e) {
      out.push_back({"check group " + std::to_string(index), "no error", std::string("error: ") + e.what(), false});
    }
  }
  return out;
}

}  // namespace symdehn::cli
