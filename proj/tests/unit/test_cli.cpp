#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "report_json.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mcm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_schema(const json& j) {
  ASSERT_TRUE(j.is_object());
  if (j.contains("results")) {
    EXPECT_TRUE(j.at("check").is_string());
    EXPECT_TRUE(j.at("pass").is_boolean());
    EXPECT_TRUE(j.at("elapsed_ms").is_number());
    for (const auto& r : j.at("results")) expect_schema(r);
    return;
  }
  EXPECT_TRUE(j.at("check").is_string());
  EXPECT_TRUE(j.at("n").is_number_integer() || j.at("n").is_null());
  EXPECT_TRUE(j.at("params").is_object());
  EXPECT_TRUE(j.at("pass").is_boolean());
  EXPECT_TRUE(j.at("elapsed_ms").is_number());
  EXPECT_TRUE(j.at("details").is_object());
  if (!j.at("pass").get<bool>()) EXPECT_TRUE(j.at("counterexample").is_string());
}

}  // namespace

TEST(Cli, FactorPrintsType) {
  const auto r = run({"factor", "--field", "2^1", "--poly", "0x1,0x1,0x0,0x0,0x0,0x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "[2,3]");
}

TEST(Cli, MainIdentityPasses) {
  const auto r = run({"verify", "main-identity", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS main-identity n=3", 0), 0u);
}

TEST(Cli, PermcheckReportsNonPermutation) {
  const auto r = run({"permcheck", "--n", "3", "--m", "3", "--json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["details"]["permutation"], "no");
  EXPECT_EQ(j["details"]["gcd(2m,n)"], "3");
}

TEST(Cli, DicksonText) {
  const auto r = run({"dickson", "--k", "5"});
  EXPECT_EQ(r.out, "0x0,0x1,0x0,0x1,0x0,0x1\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "main-identity"}).code, 2);
  EXPECT_EQ(run({"verify", "main-identity", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"factor", "--field", "2^1"}).code, 2);
  EXPECT_EQ(run({"factor", "--field", "2^1", "--poly", "0x2"}).code, 2);
  EXPECT_EQ(run({"frame", "--n", "2", "--a", "0x0"}).code, 2);
  EXPECT_EQ(run({"verify", "orbit-structure", "--n", "2", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "main-identity", "--n", "3", "--perturb"}).code, 1);
}

TEST(Cli, JsonSchemaForEverySubcommand) {
  const std::vector<std::vector<std::string>> cmds{
      {"verify", "main-identity", "--n", "2"},
      {"verify", "closed-forms", "--n", "3"},
      {"verify", "cj-product", "--n", "2"},
      {"verify", "e-transforms", "--n", "2"},
      {"verify", "root-product", "--n", "2", "--k", "2"},
      {"verify", "dickson-relations", "--n", "2"},
      {"verify", "dihedral", "--n", "2"},
      {"verify", "class-counts", "--n", "2"},
      {"verify", "stabilizer", "--n", "2"},
      {"verify", "splitfield", "--n", "2", "--k", "2"},
      {"verify", "seven-formulas", "--n", "2", "--a", "0x1"},
      {"verify", "orbit-structure", "--n", "2"},
      {"verify", "all", "--max-n", "2"},
      {"correspond", "--n", "2", "--k", "2"},
      {"correspond", "--n", "2", "--k", "2", "--a", "0x2"},
      {"quintic", "--k", "3"},
      {"counts", "--n", "2", "--m", "2"},
      {"permcheck", "--n", "2", "--m", "1"},
      {"factor", "--field", "2^2", "--poly", "0x1,0x1,0x1"},
      {"dickson", "--k", "9", "--n", "2"},
      {"frame", "--n", "2", "--k", "1", "--a", "0x1", "--dump"},
  };
  for (auto args : cmds) {
    args.push_back("--json");
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << " " << args[1] << "\n" << r.err;
    expect_schema(json::parse(r.out));
  }
}

TEST(Cli, PerturbedChecksFailWithCounterexample) {
  const auto r = run({"verify", "cj-product", "--n", "3", "--perturb", "--json"});
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  expect_schema(j);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_TRUE(j.contains("counterexample"));
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "all", "--max-n", "3", "--json", "--no-timing", "--seed", "5"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto t1 = run({"frame", "--n", "3", "--k", "2", "--a", "0x2", "--dump"});
  const auto t2 = run({"frame", "--n", "3", "--k", "2", "--a", "0x2", "--dump"});
  EXPECT_EQ(t1.out, t2.out);
  EXPECT_TRUE(t1.err.find(" ms") != std::string::npos);
}

TEST(Cli, ReportRoundTrip) {
  mcm::CheckReport r("demo");
  r.param("n", "4").param("a", "0x3");
  r.detail("x", "1");
  r.fail("broken at 0x7");
  r.elapsed_ms = 12.5;
  const auto j = mcm::cli::to_json(r);
  EXPECT_EQ(j["n"], 4);
  const mcm::CheckReport back = mcm::cli::report_from_json(ordered_json::parse(j.dump()));
  EXPECT_EQ(back.check, r.check);
  EXPECT_EQ(back.params, r.params);
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.counterexample, r.counterexample);
  EXPECT_EQ(back.details, r.details);
  EXPECT_DOUBLE_EQ(back.elapsed_ms, r.elapsed_ms);

  const auto cli = run({"verify", "class-counts", "--n", "3", "--json"});
  const ordered_json parsed = ordered_json::parse(cli.out);
  EXPECT_EQ(mcm::cli::to_json(mcm::cli::report_from_json(parsed)).dump(), parsed.dump());
}
