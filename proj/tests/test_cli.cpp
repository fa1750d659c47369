#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "congruence/chowforms.hpp"
#include "congruence/oracles.hpp"
#include "congruence/parse.hpp"

using namespace congruence;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json record(const Result& r) { return json::parse(r.out); }

}  // namespace

TEST(Cli, BidegreeOfBit) {
  auto r = run({"bidegree", "bit", "--d", "4"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(record(r), json::parse(R"({"order":12,"class":28})"));
}

TEST(Cli, BidegreeOfSec) {
  auto r = run({"bidegree", "sec", "--d", "4", "--g", "1"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(record(r)["order"], 2);
  EXPECT_EQ(record(r)["class"], 6);
}

TEST(Cli, SchubertProductPlain) {
  auto r = run({"--plain", "schubert", "mul", "s1", "s1"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "s2 + s11\n");
}

TEST(Cli, SchubertProductJson) {
  auto r = run({"schubert", "mul", "s1", "s21"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(record(r)["product"], "s22");
}

TEST(Cli, VerifyMatches) {
  auto r = run({"verify", "sec-order", "--curve", "twisted-cubic", "--seed", "1"});
  ASSERT_EQ(r.code, cli::kExitOk);
  auto j = record(r);
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["expected"], 1);
  EXPECT_EQ(j["verdict"], "MATCH");
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["field"], "F_32003");
}

TEST(Cli, VerifyMismatchOnHyperflexes) {
  auto r = run({"verify", "plane-inflections", "--plane-curve", "fermat:4"});
  EXPECT_EQ(r.code, cli::kExitMismatch);
  auto j = record(r);
  EXPECT_EQ(j["count"], 12);
  EXPECT_EQ(j["count_with_multiplicity"], 24);
  EXPECT_EQ(j["verdict"], "MISMATCH");
}

TEST(Cli, ChowFormReparses) {
  auto r = run({"chowform", "twisted-cubic"});
  ASSERT_EQ(r.code, cli::kExitOk);
  RationalField q;
  auto expected = chow_form(twisted_cubic(q));
  EXPECT_EQ(parse_polynomial(record(r)["chow_form"].get<std::string>(), expected.ring()), expected);
}

TEST(Cli, ChowFormFromParametrization) {
  auto a = run({"chowform", "twisted-cubic"});
  auto b = run({"chowform", "s^3,s^2*t,s*t^2,t^3"});
  ASSERT_EQ(b.code, cli::kExitOk);
  EXPECT_EQ(record(a)["chow_form"], record(b)["chow_form"]);
}

TEST(Cli, DualPerp) {
  auto r = run({"dual", "perp", "s2 + 3*s11"});
  ASSERT_EQ(r.code, cli::kExitOk);
  auto j = record(r);
  EXPECT_EQ(j["perp"], "3*s2 + s11");
  EXPECT_EQ(j["bidegree"]["order"], 3);
  EXPECT_EQ(j["bidegree"]["class"], 1);
}

TEST(Cli, ClassifyTangentLine) {
  auto r = run({"classify", "line-curve", "0,0,0,0,0,1", "twisted-cubic"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(record(r)["profile"], "{2: 1}");
  EXPECT_EQ(record(r)["meets"], true);
}

TEST(Cli, MalformedInputsAreUsageErrors) {
  for (auto args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"chowform", "s^3,s^2*t,s*t^2,t^^3"},
           {"classify", "line-curve", "1,0,0,0,0", "twisted-cubic"},
           {"--seed", "zz", "verify", "sec-order", "--curve", "twisted-cubic"},
           {"bidegree", "bit", "--d", "3"},
           {"schubert", "mul", "s3", "s1"},
           {"verify", "no-such-oracle", "--curve", "twisted-cubic"},
       }) {
    auto r = run(args);
    EXPECT_EQ(r.code, cli::kExitUsage) << (args.empty() ? "<none>" : args[0]);
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, SingularPlaneCurveRejected) {
  auto r = run({"verify", "plane-bitangents", "--plane-curve", "(x^2+y^2-z^2)*(x^2-2*y^2+3*z^2)"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("singular"), std::string::npos);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("CONGRUENCE_LAB_SEED", "77", 1);
  auto r = run({"verify", "sec-order", "--curve", "twisted-cubic"});
  ::unsetenv("CONGRUENCE_LAB_SEED");
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(record(r)["seed"], 77);
  auto explicit_seed = run({"--seed", "5", "verify", "sec-order", "--curve", "twisted-cubic"});
  EXPECT_EQ(record(explicit_seed)["seed"], 5);
}

TEST(Cli, DefaultSeed) {
  ::unsetenv("CONGRUENCE_LAB_SEED");
  auto r = run({"verify", "sec-class", "--curve", "twisted-cubic"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(record(r)["seed"], 0x5EED);
}
