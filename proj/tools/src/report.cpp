#include "symdehn_cli/report.hpp"

#include <numeric>

namespace symdehn::cli {

namespace {

ParseError bad(const std::string& what) { return ParseError("malformed report: " + what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing '") + key + "'");
  return j.at(key);
}

std::string string_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_string()) throw bad(std::string("'") + key + "' is not a string");
  return v.get<std::string>();
}

Integer integer_of(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    try {
      return to_integer(v.get<std::string>());
    } catch (const std::exception&) {
      throw bad("integer '" + v.get<std::string>() + "'");
    }
  }
  throw bad("expected an integer");
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QuadElem& z) {
  Integer den = lcm(z.x().den(), z.y().den());
  Integer X = z.x().num() * (den / z.x().den());
  Integer Y = z.y().num() * (den / z.y().den());
  return Json{{"field", integer_json(z.d())},
              {"num", Json::array({X.get_str(), Y.get_str()})},
              {"den", den.get_str()},
              {"text", z.str()}};
}

Json to_json(const TowerElem& w) { return Json{{"re", to_json(w.p())}, {"im", to_json(w.q())}, {"text", w.str()}}; }

Json to_json(const SurdLength& s) { return Json{{"r", s.r().str()}, {"m", integer_json(s.m())}, {"text", s.str()}}; }

Json to_json(const RationalAngle& a) { return Json{{"fraction_of_pi", a.fraction().str()}, {"text", a.str()}}; }

Json to_json(const Angle& a) {
  Json j{{"rationality", to_string(a.rationality())}, {"text", a.str()}};
  if (a.is_rational_pi()) {
    j["kind"] = "rational_pi";
    j["value"] = to_json(*a.rational_value());
  } else {
    j["kind"] = "arg";
    j["unit"] = to_json(*a.unit());
  }
  return j;
}

Json to_json(const DehnTensor& t) {
  Json terms = Json::array();
  for (const DehnTerm& term : t.terms())
    terms.push_back(Json{{"length", to_json(term.length)},
                         {"angle", to_json(term.angle)},
                         {"multiplicity", term.multiplicity}});
  return Json{{"terms", terms}, {"zero_status", to_string(t.zero_status())}, {"text", t.str()}};
}

Json to_json(const NormEquationSolution& s) {
  Json j{{"a", s.a.get_str()},
         {"b", s.b.get_str()},
         {"k", s.k},
         {"l", s.l},
         {"n_odd", s.n_odd.get_str()},
         {"lhs_factor", s.lhs_factor},
         {"family", to_string(s.family)},
         {"text", s.str()}};
  if (s.family == SolutionFamily::two_power_pair || s.family == SolutionFamily::hex_f1 ||
      s.family == SolutionFamily::hex_f2)
    j["s"] = s.s;
  if (s.family == SolutionFamily::hex_f1 || s.family == SolutionFamily::hex_f2) j["d"] = s.d;
  return j;
}

Json to_json(const EliminationCertificate& c) {
  return Json{{"member", to_json(c.member)},
              {"norm_z", c.norm_z.get_str()},
              {"b_exceeds_d_plus_2", c.b_exceeds_d_plus_2},
              {"b_exceeds_s", c.b_exceeds_s},
              {"contradiction", c.contradiction}};
}

Json to_json(const ComplexityBounds& c) {
  return Json{{"lower", c.lower}, {"upper", c.upper}, {"exact", c.exact()}};
}

Json to_json(const TrivialityReport& r, bool verbose) {
  Json spec{{"n", r.spec.n()}, {"text", r.spec.str()}, {"h2", r.spec.h_squared().str()}};
  if (auto v = r.spec.v()) spec["v"] = v->str();
  Json chain = Json::array();
  for (const Obstruction& o : r.chain) {
    Json e{{"kind", to_string(o.kind)}, {"detail", o.detail}};
    if (o.value) e["value"] = to_json(*o.value);
    chain.push_back(e);
  }
  Json j{{"spec", spec}, {"verdict", to_string(r.verdict)}, {"chain", chain}};
  if (r.invariant) j["invariant"] = to_json(*r.invariant);
  if (r.norm_solution) j["norm_solution"] = to_json(*r.norm_solution);
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  if (verbose) j["evidence"] = r.evidence;
  return j;
}

// ---------------------------------------------------------------------------

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw bad("rational is not a string");
  return Rational::parse(j.get<std::string>());
}

QuadElem quad_from_json(const Json& j) {
  const Json& num = field_of(j, "num");
  if (!num.is_array() || num.size() != 2) throw bad("'num' must be a pair");
  Integer d = integer_of(field_of(j, "field"));
  Integer den = integer_of(field_of(j, "den"));
  if (den <= 0) throw bad("nonpositive denominator");
  QuadElem z(QuadField::of(d), Rational(integer_of(num[0]), den), Rational(integer_of(num[1]), den));
  if (z.str() != string_of(j, "text")) throw bad("parts and text disagree for " + string_of(j, "text"));
  return z;
}

SurdLength surd_from_json(const Json& j) {
  SurdLength s(rational_from_json(field_of(j, "r")), integer_of(field_of(j, "m")));
  if (s.str() != string_of(j, "text")) throw bad("length text disagrees");
  return s;
}

Angle angle_from_json(const Json& j) {
  std::string kind = string_of(j, "kind");
  if (kind == "rational_pi")
    return Angle::rational_pi(RationalAngle::from_fraction(rational_from_json(field_of(field_of(j, "value"), "fraction_of_pi"))));
  if (kind == "arg") return Angle::arg_of(quad_from_json(field_of(j, "unit")));
  throw bad("unknown angle kind '" + kind + "'");
}

DehnTensor tensor_from_json(const Json& j) {
  const Json& terms = field_of(j, "terms");
  if (!terms.is_array()) throw bad("'terms' is not an array");
  std::vector<DehnTerm> out;
  for (const Json& t : terms) {
    const Json& mult = field_of(t, "multiplicity");
    if (!mult.is_number_integer()) throw bad("multiplicity is not an integer");
    out.push_back({surd_from_json(field_of(t, "length")), angle_from_json(field_of(t, "angle")), mult.get<std::int64_t>()});
  }
  DehnTensor t = DehnTensor::from_terms(std::move(out));
  if (t.str() != string_of(j, "text")) throw bad("tensor text disagrees");
  return t;
}

Json make_document(const std::string& command, Json inputs, Json payload) {
  return Json{{"header", {{"tool", kToolName}, {"version", kToolVersion}}},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"payload", std::move(payload)}};
}

Json parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  const Json& header = field_of(j, "header");
  if (string_of(header, "tool") != kToolName) throw bad("unexpected tool name");
  string_of(header, "version");
  string_of(j, "command");
  field_of(j, "inputs");
  field_of(j, "payload");
  return j;
}

}  // namespace symdehn::cli
