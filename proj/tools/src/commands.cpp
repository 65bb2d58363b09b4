#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "symdehn_cli/cli.hpp"
#include "symdehn_cli/report.hpp"

namespace symdehn::cli {

namespace {

struct Options {
  bool json = false;
  bool verbose = false;

  // verdict, complexity
  int n = 0;
  std::string h2;
  std::string v;
  std::string ratio;

  // solve-norm
  unsigned long b_max = 0;
  std::string mode = "closed";

  // families
  unsigned long s_max = 0;
  unsigned long d_max = 0;
};

struct Outcome {
  int code;
  Json inputs;
  Json payload;
  std::string text;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

PyramidSpec spec_from(const Options& o) {
  if (o.h2.empty() == o.v.empty()) throw UsageError("give exactly one of --h2 and --v");
  if (!o.h2.empty()) return PyramidSpec::with_height_squared(o.n, Rational::parse(o.h2));
  return PyramidSpec::with_v(o.n, Rational::parse(o.v));
}

Json spec_inputs(const Options& o) {
  Json j{{"n", o.n}};
  if (!o.h2.empty()) j["h2"] = o.h2;
  if (!o.v.empty()) j["v"] = o.v;
  return j;
}

Outcome cmd_verdict(const Options& o) {
  PyramidSpec spec = spec_from(o);
  TrivialityReport r = triviality_verdict(spec, o.verbose);
  std::ostringstream t;
  t << spec.str() << ": " << to_string(r.verdict) << "\n";
  for (const Obstruction& ob : r.chain) {
    t << "  " << to_string(ob.kind) << ": " << ob.detail;
    if (ob.value) t << " [" << ob.value->str() << "]";
    t << "\n";
  }
  if (r.norm_solution) t << "  norm solution: " << r.norm_solution->str() << "\n";
  if (r.certificate) t << "  elimination: " << r.certificate->contradiction << "\n";
  if (r.invariant) t << "  invariant: " << r.invariant->str() << "\n";
  if (o.verbose)
    for (const std::string& e : r.evidence) t << "  - " << e << "\n";
  return {r.verdict == Verdict::trivial ? kOk : kFailure, spec_inputs(o), to_json(r, o.verbose), t.str()};
}

Outcome cmd_solve_norm(const Options& o) {
  std::ostringstream t;
  Json payload;
  auto list = [&](const char* label, const std::vector<NormEquationSolution>& v) {
    Json arr = Json::array();
    t << label << " (" << v.size() << " solutions)\n";
    for (const auto& s : v) {
      arr.push_back(to_json(s));
      t << "  " << s.str() << "\n";
    }
    payload[label] = arr;
  };
  int code = kOk;
  if (o.mode == "closed") {
    list("closed", solve_prop10(o.b_max));
  } else if (o.mode == "oracle") {
    list("oracle", oracle_norm_equation(o.b_max));
  } else {
    auto closed = solve_prop10(o.b_max);
    auto scan = oracle_norm_equation(o.b_max);
    list("closed", closed);
    bool agree = closed == scan;
    payload["oracle_count"] = scan.size();
    payload["agreement"] = agree;
    t << "oracle agreement: " << (agree ? "true" : "false") << "\n";
    if (!agree) {
      list("oracle", scan);
      code = kFailure;
    }
  }
  return {code, Json{{"b_max", o.b_max}, {"mode", o.mode}}, payload, t.str()};
}

Outcome cmd_families(const Options& o) {
  std::ostringstream t;
  Json members = Json::array();
  int code = kOk;
  for (const auto& m : hexagonal_families(o.s_max, o.d_max)) {
    EliminationCertificate c = hexagonal_eliminate(m);
    members.push_back(to_json(c));
    t << m.str() << "  N(z) = " << c.norm_z << ", b > d + 2: " << (c.b_exceeds_d_plus_2 ? "yes" : "no")
      << ", b > s: " << (c.b_exceeds_s ? "yes" : "no") << ", " << c.contradiction << "\n";
    if (!c.b_exceeds_d_plus_2 || !c.b_exceeds_s) code = kFailure;
  }
  t << members.size() << " members\n";
  return {code, Json{{"s_max", o.s_max}, {"d_max", o.d_max}}, Json{{"members", members}}, t.str()};
}

Outcome cmd_verify_paper(const Options&) {
  std::ostringstream t;
  Json checks = Json::array();
  int failed = 0;
  for (const PaperCheck& c : paper_checks()) {
    checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    t << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    if (!c.pass) {
      ++failed;
      t << "    expected: " << c.expected << "\n    computed: " << c.computed << "\n";
    }
  }
  t << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
  return {failed ? kFailure : kOk, Json::object(), Json{{"checks", checks}, {"failed", failed}}, t.str()};
}

Outcome cmd_complexity(const Options& o) {
  PyramidSpec spec = spec_from(o);
  DehnTensor inv = dehn_invariant(spec);
  ComplexityBounds c = complexity(inv);
  std::ostringstream t;
  t << spec.str() << "\n  invariant: " << inv.str() << "\n  zero status: " << to_string(inv.zero_status())
    << "\n  complexity: ";
  if (c.exact())
    t << c.lower << "\n";
  else
    t << "[" << c.lower << ", " << c.upper << "]\n";
  Json payload{{"invariant", to_json(inv)}, {"complexity", to_json(c)}};
  Json inputs = spec_inputs(o);
  if (!o.ratio.empty()) {
    AngleRatioHypothesis h = dehn_under_angle_ratio(spec, Rational::parse(o.ratio));
    Json terms = Json::array();
    t << "  assuming phi = " << o.ratio << " * theta: (";
    for (std::size_t i = 0; i < h.length_terms.size(); ++i) {
      const auto& [coef, m] = h.length_terms[i];
      terms.push_back(Json{{"coefficient", coef.str()}, {"radicand", m.get_str()}});
      t << (i ? " + " : "") << coef.str() << "*sqrt(" << m << ")";
    }
    t << ") (x) " << h.two_theta.str() << ", complexity " << h.complexity.lower << "\n";
    payload["angle_ratio_hypothesis"] =
        Json{{"length_terms", terms}, {"two_theta", to_json(h.two_theta)}, {"complexity", to_json(h.complexity)}};
    inputs["ratio"] = o.ratio;
  }
  return {kOk, inputs, payload, t.str()};
}

Outcome cmd_crystal(const Options&) {
  std::ostringstream t;
  Json pyramids = Json::array();
  bool ok = true;
  for (const RegularPyramid& p : regular_pyramids()) {
    Json j{{"n", p.n}, {"name", p.name}, {"h_squared", to_json(p.h_squared)}, {"edge_squared", to_json(p.edge_squared)},
           {"edges_agree", p.edges_agree()}};
    if (p.edge) j["edge"] = to_json(*p.edge);
    pyramids.push_back(j);
    ok = ok && p.edges_agree();
    t << p.name << ": h^2 = " << p.h_squared.str() << ", c^2 = " << p.edge_squared.str() << "\n";
  }
  GluingRecord g = verify_gluing_relations();
  for (const std::string& line : g.log) t << "  " << line << "\n";
  t << "prism relation: " << g.prism.str() << "\n";
  t << "scaled relation: " << g.scaled.str() << "\n";
  t << "crystal relation: " << g.crystal.str() << "\n";
  P5Check c = p5_check();
  for (const std::string& line : c.log) t << "  " << line << "\n";
  t << "P5: N(W) = " << c.w_norm.str() << ", W^60 = 1: " << (c.w60_is_one ? "yes" : "no") << "\n";
  ok = ok && g.all_pass() && c.w_norm.is_one() && !c.w60_is_one;

  Json gluing{{"exp_phi3", to_json(g.exp_phi3)},
              {"exp_phi4", to_json(g.exp_phi4)},
              {"exp_theta3", to_json(g.exp_theta3)},
              {"alpha4", to_json(g.alpha4)},
              {"dehn_p4", to_json(g.dehn_p4)},
              {"dehn_p3", to_json(g.dehn_p3)},
              {"prism", to_json(g.prism)},
              {"scaled", to_json(g.scaled)},
              {"crystal", to_json(g.crystal)},
              {"prism_edge_squared", to_json(g.prism_edge_squared)},
              {"crystal_edge_k", to_json(g.crystal_edge_k)},
              {"crystal_edge_t", to_json(g.crystal_edge_t)},
              {"all_pass", g.all_pass()}};
  Json p5{{"exp_phi", to_json(c.exp_phi)}, {"alpha", to_json(c.alpha)},   {"w", to_json(c.w)},
          {"w_norm", to_json(c.w_norm)},   {"w60", to_json(c.w60)},       {"w60_is_one", c.w60_is_one},
          {"w_matches_display", c.w == c.w_displayed}};
  return {ok ? kOk : kFailure, Json::object(), Json{{"pyramids", pyramids}, {"gluing", gluing}, {"p5", p5}}, t.str()};
}

void add_spec_options(CLI::App* sub, Options& o) {
  sub->add_option("n", o.n, "polygon size (3, 4 or 6)")->required();
  auto* h2 = sub->add_option("--h2", o.h2, "height squared p/q");
  auto* v = sub->add_option("--v", o.v, "ratio v = a/b");
  h2->excludes(v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Dehn invariants and scissors-congruence verdicts for symmetric pyramids", "symdehn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "emit a JSON document");
  app.add_flag("--verbose", o.verbose, "run every obstruction test and print the evidence");
  app.set_version_flag("--version", kToolVersion);

  auto* verdict = app.add_subcommand("verdict", "decide whether P_n is scissors congruent to a cube");
  add_spec_options(verdict, o);

  auto* solve = app.add_subcommand("solve-norm", "solve (b^2 - a^2)^2 = 2^k n^b");
  solve->add_option("--b-max", o.b_max, "largest b")->required()->check(CLI::Range(2ul, 1000000ul));
  solve->add_option("--mode", o.mode, "closed, oracle or both")->check(CLI::IsMember({"closed", "oracle", "both"}));

  auto* families = app.add_subcommand("families", "hexagonal families with elimination certificates");
  families->add_option("--s-max", o.s_max, "largest power of 3")->required()->check(CLI::Range(1ul, 200ul));
  families->add_option("--d-max", o.d_max, "largest power of 2")->required()->check(CLI::Range(1ul, 300ul));

  auto* verify = app.add_subcommand("verify-paper", "run the reproduction battery");

  auto* comp = app.add_subcommand("complexity", "Dehn invariant and its complexity");
  add_spec_options(comp, o);
  comp->add_option("--ratio", o.ratio, "assume phi = r * theta for this rational r");

  auto* crystal = app.add_subcommand("crystal", "regular pyramids, gluing relations and the P5 check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "symdehn: " << e.what() << "\n";
    return kUsage;
  }

  std::string command;
  try {
    Outcome r;
    if (verdict->parsed()) {
      command = "verdict";
      r = cmd_verdict(o);
    } else if (solve->parsed()) {
      command = "solve-norm";
      r = cmd_solve_norm(o);
    } else if (families->parsed()) {
      command = "families";
      r = cmd_families(o);
    } else if (verify->parsed()) {
      command = "verify-paper";
      r = cmd_verify_paper(o);
    } else if (comp->parsed()) {
      command = "complexity";
      r = cmd_complexity(o);
    } else {
      command = "crystal";
      (void)crystal;
      r = cmd_crystal(o);
    }
    if (o.json)
      out << make_document(command, r.inputs, r.payload).dump(2) << "\n";
    else
      out << r.text;
    return r.code;
  } catch (const UsageError& e) {
    err << "symdehn " << command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "symdehn " << command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "symdehn " << command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const MixedFieldError& e) {
    err << "symdehn " << command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const InternalConsistencyError& e) {
    err << "symdehn " << command << ": internal consistency failure: " << e.what() << "\n";
    return kFailure;
  } catch (const ResourceError& e) {
    err << "symdehn " << command << ": resource limit: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace symdehn::cli
