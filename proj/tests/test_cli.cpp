#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace metabelian::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Generators) {
  const auto r = run_cli({"generators", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "h_12 = (u1*x2 - u2*x1)*(x1 - x2)\n");
  const auto three = run_cli({"generators", "--n", "3"}).out;
  EXPECT_EQ(std::count(three.begin(), three.end(), '\n'), 3);
  EXPECT_NE(three.find("h_23 = "), std::string::npos);
}

TEST(Cli, Decompose) {
  const auto r = run_cli({"decompose", "--n", "2", "[x2,x1,x2] - [x2,x1,x1]"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "f1=0; q_{12} = 1\nverified: true\n");
}

TEST(Cli, DecomposeJson) {
  const auto r = run_cli({"decompose", "--n", "3", "--json", "x1+x2+x3 + 2*[x2,x1,x2-x1]+2*[x3,x1,x3-x1]+2*[x3,x2,x3-x2]"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["f1"], "1");
  EXPECT_EQ(doc["verified"], true);
  ASSERT_EQ(doc["parts"].size(), 1u);
  EXPECT_EQ(doc["parts"][0]["i"], 1);
  EXPECT_EQ(doc["parts"][0]["j"], 2);
  EXPECT_EQ(doc["parts"][0]["q"][0]["c"], "2");
  EXPECT_EQ(doc["parts"][0]["q"][0]["a"], nlohmann::json::array({0, 0, 0}));
}

TEST(Cli, DecomposeRejectsNonInvariant) {
  const auto r = run_cli({"decompose", "--n", "2", "[x2,x1]"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("(1 2)"), std::string::npos) << r.err;
}

TEST(Cli, DecomposeRespectsDegreeGuard) {
  const auto r = run_cli({"decompose", "--n", "2", "--max-degree", "2", "[x2,x1,x2] - [x2,x1,x1]"});
  EXPECT_EQ(r.code, kExitDomain);
}

TEST(Cli, IsInvariant) {
  EXPECT_EQ(run_cli({"is-invariant", "--n", "2", "[x2,x1]"}).out, "false, violated by (1 2)\n");
  EXPECT_EQ(run_cli({"is-invariant", "--n", "3", "x1+x2+x3"}).out, "true\n");
}

TEST(Cli, VerifyRelations) {
  const auto r = run_cli({"verify-relations", "--n", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "all 4 relations hold\n");
}

TEST(Cli, NormalFormRoundTrip) {
  const auto first = run_cli({"normal-form", "--n", "3", "[x3,x2,x1] + 2*[x2,x1] ad(x1^2 - x3) + x2"});
  ASSERT_EQ(first.code, kExitOk);
  std::string text = first.out;
  text.pop_back();
  const auto second = run_cli({"normal-form", "--n", "3", text});
  EXPECT_EQ(second.out, first.out);
}

TEST(Cli, NormalFormWithPermutation) {
  const auto r = run_cli({"normal-form", "--n", "2", "--perm", "(1 2)", "[x2,x1]"});
  EXPECT_EQ(r.out, "-[x2,x1]\n");
}

TEST(Cli, EmbedAndPreimage) {
  EXPECT_EQ(run_cli({"embed", "--n", "2", "x1"}).out, "u1*(1) + v1\n");
  const auto p = run_cli({"preimage", "--n", "2", "(u1*x2 - u2*x1)*(x1 - x2)"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_EQ(p.out, "-[x2,x1,x1] + [x2,x1,x2]\n");
  const auto bad = run_cli({"preimage", "--n", "2", "u1"});
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_NE(bad.err.find("x1"), std::string::npos);
}

TEST(Cli, EmbedJsonShape) {
  const auto doc = nlohmann::json::parse(run_cli({"embed", "--n", "2", "--json", "[x2,x1]"}).out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["u"], nlohmann::json::array({"-x2", "x1"}));
  EXPECT_EQ(doc["v"], nlohmann::json::array({"0", "0"}));
  EXPECT_EQ(doc["in_commutator_image"], true);
}

TEST(Cli, Reynolds) {
  EXPECT_EQ(run_cli({"reynolds", "--n", "2", "x1"}).out, "1/2*x1 + 1/2*x2\n");
}

TEST(Cli, GeneratorLie) {
  EXPECT_EQ(run_cli({"generator-lie", "--n", "2", "--i", "1", "--j", "2"}).out,
            "-[x2,x1,x1] + [x2,x1,x2]\n");
  EXPECT_EQ(run_cli({"generator-lie", "--n", "2", "--i", "2", "--j", "1"}).code, kExitDomain);
}

TEST(Cli, SymmetrizePoly) {
  const auto r = run_cli({"symmetrize-poly", "--n", "2", "x1^2 + x2^2"});
  EXPECT_EQ(r.out, "symmetric: x1^2 + x2^2\nelementary: e1^2 - 2*e2\n");
}

TEST(Cli, InvariantBasis) {
  const auto r = run_cli({"invariant-basis", "--n", "2", "--degree", "4", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 1);
  EXPECT_EQ(run_cli({"invariant-basis", "--n", "2", "--degree", "20"}).code, kExitDomain);
}

TEST(Cli, Selftest) {
  const auto r = run_cli({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ParseErrorsExitWithOne) {
  const auto r = run_cli({"normal-form", "--n", "2", "[x2,,x1]"});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"bogus"}).code, kExitParse);
  EXPECT_EQ(run_cli({"generators", "--n", "1"}).code, kExitParse);
  EXPECT_EQ(run_cli({}).code, kExitParse);
}

TEST(Cli, RankErrorsAreDomainErrors) {
  EXPECT_EQ(run_cli({"normal-form", "--n", "2", "[x3,x1]"}).code, kExitDomain);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("decompose"), std::string::npos);
}

}  // namespace
}  // namespace metabelian::cli
