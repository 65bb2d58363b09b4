#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json_roundtrip.hpp"
#include "symdehn_cli/cli.hpp"
#include "symdehn_cli/report.hpp"

using namespace symdehn;
using namespace symdehn::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), "--json");
  Run r = run(args);
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return parse_document(r.out);
}

std::vector<std::pair<std::string, std::string>> pairs_in(const Json& list) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Json& s : list) out.emplace_back(s.at("a").get<std::string>(), s.at("b").get<std::string>());
  return out;
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verdict exit codes") {
    CHECK(run({"verdict", "4", "--h2", "1/2"}).code == kOk);
    Run r = run({"verdict", "4", "--v", "1/3"});
    CHECK(r.code == kFailure);
    CHECK(r.out.find("pi_not_root_of_unity") != std::string::npos);
    CHECK(run({"verdict", "6", "--v", "1/2"}).code == kUsage);
    CHECK(run({"verdict", "5", "--h2", "1"}).code == kUsage);
    CHECK(run({"verdict", "4", "--h2", "x"}).code == kUsage);
    CHECK(run({"verdict", "4", "--h2", "-1"}).code == kUsage);
    CHECK(run({"verdict", "4"}).code == kUsage);
    CHECK(run({"verdict", "4", "--h2", "1/2", "--v", "1/3"}).code == kUsage);
    CHECK(run({}).code == kUsage);
    CHECK(run({"--help"}).code == kOk);
  }

  TEST_CASE("verdict json") {
    Json d = run_json({"verdict", "4", "--v", "1/3"}, kFailure);
    CHECK(d.at("command") == "verdict");
    CHECK(d.at("header").at("version") == kToolVersion);
    const Json& p = d.at("payload");
    CHECK(p.at("verdict") == "nontrivial");
    REQUIRE(p.at("chain").size() == 1);
    CHECK(p.at("chain")[0].at("kind") == "pi_not_root_of_unity");
    CHECK(quad_from_json(p.at("chain")[0].at("value")) == pi_product(4, 1, 3));
    CHECK_FALSE(p.contains("evidence"));

    Json v = run_json({"--verbose", "verdict", "4", "--v", "1/3"}, kFailure);
    CHECK(v.at("payload").contains("evidence"));

    Json t = run_json({"verdict", "4", "--h2", "1/2"});
    CHECK(t.at("payload").at("chain")[0].at("kind") == "case_a_hit");
    CHECK(tensor_from_json(t.at("payload").at("invariant")).is_canonical_zero());
  }

  TEST_CASE("solve-norm") {
    Json d = run_json({"solve-norm", "--b-max", "10", "--mode", "both"});
    CHECK(d.at("payload").at("agreement") == true);
    CHECK(pairs_in(d.at("payload").at("closed")) == Pairs{{"1", "2"}, {"1", "3"}, {"3", "5"}, {"7", "9"}});
    Json two = run_json({"solve-norm", "--b-max", "2"});
    CHECK(pairs_in(two.at("payload").at("closed")) == Pairs{{"1", "2"}});
    Json wide = run_json({"solve-norm", "--b-max", "64", "--mode", "both"});
    CHECK(wide.at("payload").at("agreement") == true);
    Json oracle = run_json({"solve-norm", "--b-max", "10", "--mode", "oracle"});
    CHECK(pairs_in(oracle.at("payload").at("oracle")).size() == 4);
    CHECK(run({"solve-norm", "--b-max", "1"}).code == kUsage);
    CHECK(run({"solve-norm", "--b-max", "5", "--mode", "guess"}).code == kUsage);
  }

  TEST_CASE("families") {
    Json one = run_json({"families", "--s-max", "1", "--d-max", "1"});
    REQUIRE(one.at("payload").at("members").size() == 1);
    const Json& m = one.at("payload").at("members")[0];
    CHECK(m.at("member").at("a") == "1");
    CHECK(m.at("member").at("b") == "5");
    CHECK(m.at("contradiction") == "unit_argument");

    Json three = run_json({"families", "--s-max", "3", "--d-max", "3"});
    Pairs got;
    for (const Json& c : three.at("payload").at("members"))
      got.emplace_back(c.at("member").at("a").get<std::string>(), c.at("member").at("b").get<std::string>());
    CHECK(std::find(got.begin(), got.end(), std::pair<std::string, std::string>{"1", "5"}) != got.end());
    CHECK(std::find(got.begin(), got.end(), std::pair<std::string, std::string>{"1", "7"}) != got.end());
    CHECK(run({"families", "--s-max", "0", "--d-max", "0"}).code == kUsage);
  }

  TEST_CASE("verify-paper") {
    Run r = run({"verify-paper"});
    CHECK_MESSAGE(r.code == kOk, r.out);
    Json d = run_json({"verify-paper"});
    CHECK(d.at("payload").at("failed") == 0);
    bool found = false;
    for (const Json& c : d.at("payload").at("checks"))
      if (c.at("name") == "pi_product(4,1,3)") {
        found = true;
        CHECK(c.at("computed") == "(87/256 + 91/256*sqrt(-7))");
      }
    CHECK(found);
  }

  TEST_CASE("complexity and crystal") {
    Json c = run_json({"complexity", "4", "--h2", "4"});
    CHECK(c.at("payload").at("complexity").at("exact") == true);
    Json h = run_json({"complexity", "4", "--v", "1/3", "--ratio", "2"});
    CHECK(h.at("payload").contains("angle_ratio_hypothesis"));
    CHECK(run({"complexity", "4", "--v", "1/3", "--ratio", "0"}).code == kUsage);
    Json g = run_json({"crystal"});
    CHECK(g.at("payload").at("gluing").at("all_pass") == true);
    CHECK(g.at("payload").at("p5").at("w60_is_one") == false);
    CHECK(g.at("payload").at("pyramids").size() == 3);
  }

  TEST_CASE("json output is byte-identical across runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"--json", "--verbose", "verdict", "6", "--v", "1/3"},
                                                                  {"--json", "solve-norm", "--b-max", "20", "--mode", "both"},
                                                                  {"--json", "crystal"},
                                                                  {"--json", "families", "--s-max", "4", "--d-max", "5"}}) {
      Run a = run(args), b = run(args);
      CHECK(a.out == b.out);
      CHECK(!a.out.empty());
    }
  }

  TEST_CASE("quadratic value encoding") {
    QuadElem z(QuadField::of(-7), Rational(87, 256), Rational(91, 256));
    Json j = to_json(z);
    CHECK(j.at("field") == -7);
    CHECK(j.at("num") == Json::array({"87", "91"}));
    CHECK(j.at("den") == "256");
    CHECK(j.at("text") == "(87/256 + 91/256*sqrt(-7))");
    Json tampered = j;
    tampered["num"][0] = "88";
    CHECK_THROWS_AS(quad_from_json(tampered), ParseError);
    CHECK_THROWS_AS(parse_document("{\"header\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_document("not json"), ParseError);
  }

  TEST_CASE("json round trip property") {
    props::Outcome o = props::json_round_trip();
    INFO(o.first_failure);
    CHECK(o.failures == 0);
    CHECK(o.cases >= 500);
  }
}
