#include "orbitforge/cli.hpp"
#include "orbitforge/json_io.hpp"
#include "orbitforge/parse.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using namespace orbitforge;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool is_rat_string(const Json& j) {
  if (!j.is_string()) return false;
  auto s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return false;
  try {
    Rat r = parse_rat(s);
    return to_string(r) == s;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void expect_mpoly_schema(const Json& j) {
  ASSERT_TRUE(j.contains("vars") && j["vars"].is_array());
  ASSERT_TRUE(j.contains("terms") && j["terms"].is_array());
  for (const auto& t : j["terms"]) {
    ASSERT_TRUE(t["e"].is_array());
    EXPECT_EQ(t["e"].size(), j["vars"].size());
    EXPECT_TRUE(is_rat_string(t["c"]));
  }
}

void expect_report_schema(const Json& j) {
  ASSERT_TRUE(j["suite"].is_string());
  ASSERT_TRUE(j["checks"].is_array());
  bool all = true;
  for (const auto& c : j["checks"]) {
    ASSERT_TRUE(c["name"].is_string());
    ASSERT_TRUE(c["status"] == "pass" || c["status"] == "fail");
    all = all && c["status"] == "pass";
    if (c.contains("witness")) expect_mpoly_schema(c["witness"]);
  }
  EXPECT_EQ(j["status"], all ? "pass" : "fail");
}

}  // namespace

TEST(MPolyJson, RoundTripAndOrder) {
  RingPtr r = make_ring({"t1", "t2"}, true);
  Monomial inv;
  inv.e[1] = -1;
  MPoly p = parse_poly(r, "3/4*t1^2*t2 + 5") - MPoly::monomial(r, inv);
  Json j = to_json(p);
  expect_mpoly_schema(j);
  EXPECT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(j["terms"][0]["c"], "-1/1");
  EXPECT_EQ(j["terms"][2]["c"], "3/4");
  MPoly back = mpoly_from_json(j);
  EXPECT_EQ(back.to_string(), p.to_string());
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Cli, VerifyInvariantsPasses) {
  CliRun r = run({"verify", "--suite", "invariants", "--model", "rat"});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  expect_report_schema(j);
  EXPECT_EQ(j["status"], "pass");
}

TEST(Cli, VerifyOperatorTrigPasses) {
  CliRun r = run({"verify", "--suite", "operator", "--model", "trig"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["checks"].size(), 15u);
}

TEST(Cli, TamperedEnergyFails) {
  CliRun r = run({"verify", "--suite", "operator", "--model", "rat", "--tamper", "E0"});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  expect_report_schema(j);
  bool found = false;
  for (const auto& c : j["checks"]) {
    if (c["name"] != "E0") continue;
    found = true;
    EXPECT_EQ(c["status"], "fail");
    ASSERT_TRUE(c.contains("witness"));
    MPoly w = mpoly_from_json(c["witness"]);
    EXPECT_TRUE(w.is_constant());
    EXPECT_NE(w.constant_term(), 0);
  }
  EXPECT_TRUE(found);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--mu", "1/0"}).code, 2);
  EXPECT_EQ(run({"verify", "--mu", "abc"}).code, 2);
  EXPECT_EQ(run({"verify", "--model", "hyperbolic"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "qes", "--model", "trig"}).code, 2);
  EXPECT_EQ(run({"verify", "--tamper", "B"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"eval", "tau"}).code, 2);
  EXPECT_EQ(run({"eval", "tau", "--x", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"eigenfunctions", "--model", "trig", "--mu", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SpectrumRational) {
  CliRun r = run({"spectrum", "--model", "rat", "--omega", "1", "--n", "8"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  std::vector<long> degs;
  for (const auto& l : j["levels"]) degs.push_back(l["degeneracy"].get<long>());
  EXPECT_EQ(degs, (std::vector<long>{1, 1, 1, 2, 3}));
  EXPECT_EQ(j["levels"][1]["eigenvalue"], "-4/1");
  EXPECT_EQ(j["levels"][1]["eigenvalue_literal"], "-8/1");
}

TEST(Cli, SpectrumTrigAndEmpty) {
  CliRun r = run({"spectrum", "--model", "trig", "--mu", "1/3", "--nu", "1/5", "--n", "2"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["labels"].size(), 5u);
  EXPECT_EQ(j["labels"][1]["eigenvalue"], "-58/15");
  CliRun e = run({"spectrum", "--model", "rat", "--n", "-1"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(Json::parse(e.out)["levels"].empty());
}

TEST(Cli, EigenfunctionsRational) {
  CliRun r = run({"eigenfunctions", "--model", "rat", "--n", "2", "--mu", "1/3", "--nu", "1/5", "--omega", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["model"], "rat");
  EXPECT_EQ(j["params"]["mu"], "1/3");
  ASSERT_EQ(j["entries"].size(), 5u);
  for (const auto& e : j["entries"]) {
    EXPECT_EQ(e["appendix_match"], "pass");
    EXPECT_TRUE(is_rat_string(e["eigenvalue"]));
    expect_mpoly_schema(e["eigenfunction"]);
  }
}

TEST(Cli, EigenfunctionsTrigLabels) {
  CliRun r = run({"eigenfunctions", "--model", "trig", "--n", "2", "--mu", "1/3", "--nu", "1/5"});
  ASSERT_EQ(r.code, 0);
  std::set<std::vector<int>> labels;
  Json j = Json::parse(r.out);
  for (const auto& e : j["entries"]) labels.insert(e["label"].get<std::vector<int>>());
  for (const auto& l : std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {2, 0, 0, 0}})
    EXPECT_TRUE(labels.count(l));
}

TEST(Cli, EigenfunctionsGroundOnlyAndResonance) {
  CliRun r = run({"eigenfunctions", "--n", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["entries"].size(), 1u);
  CliRun res = run({"eigenfunctions", "--omega", "0"});
  EXPECT_EQ(res.code, 1);
  EXPECT_NE(res.err.find("ResonantDegeneracy"), std::string::npos);
}

TEST(Cli, EvalTau) {
  CliRun r = run({"eval", "tau", "--model", "rat", "--x", "1,2,3,5"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["values"]["t2"], "39/1");
  EXPECT_EQ(j["values"]["delta_plus_delta_minus"], "967680/1");
  CliRun t = run({"eval", "tau", "--model", "trig", "--x", "0,0,0,0"});
  ASSERT_EQ(t.code, 0);
  Json jt = Json::parse(t.out);
  EXPECT_EQ(jt["values"]["t1"], "24/1");
  EXPECT_EQ(jt["values"]["t2"], "24/1");
  EXPECT_EQ(jt["values"]["t3"], "96/1");
  EXPECT_EQ(jt["values"]["t4"], "96/1");
}

TEST(Cli, EvalPotential) {
  CliRun bad = run({"eval", "potential", "--model", "rat", "--x", "1,1,1,1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("BoundarySingularity"), std::string::npos);
  CliRun ok = run({"eval", "potential", "--model", "rat", "--x", "1,2,3,5", "--mu", "2/3", "--nu", "3/7", "--omega", "5/2"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  Json j = Json::parse(ok.out);
  EXPECT_EQ(j["values"]["V"], j["values"]["root_sum"]);
  CliRun trig = run({"eval", "potential", "--model", "trig", "--v", "2,3,5,7"});
  ASSERT_EQ(trig.code, 0);
  Json jt = Json::parse(trig.out);
  EXPECT_EQ(jt["values"]["V_over_beta2"], jt["values"]["root_sum"]);
  CliRun p = run({"eval", "p", "--model", "rat", "--t", "1,0,0,0"});
  EXPECT_EQ(p.code, 0);
}

TEST(Cli, JsonFileAndDeterminism) {
  std::string path = ::testing::TempDir() + "orbitforge_cli_test.json";
  CliRun a = run({"verify", "--suite", "flags", "--model", "trig", "--json", path});
  ASSERT_EQ(a.code, 0);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  Json j = Json::parse(buf.str());
  expect_report_schema(j);
  CliRun b = run({"verify", "--suite", "flags", "--model", "trig"});
  CliRun c = run({"verify", "--suite", "flags", "--model", "trig"});
  EXPECT_EQ(b.out, c.out);
  EXPECT_EQ(b.out, buf.str());
  std::remove(path.c_str());
}

TEST(Cli, AllSuitesConcurrentAndOrdered) {
  Report r = run_all_suites(Model::trig);
  EXPECT_EQ(r.suite, "all");
  std::string last;
  for (const auto& c : r.checks) {
    std::string suite = c.name.substr(0, c.name.find('/'));
    EXPECT_LE(last, suite);
    last = suite;
    EXPECT_TRUE(c.pass) << c.name;
  }
  EXPECT_EQ(last, "riemann");
}
