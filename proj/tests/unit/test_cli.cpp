#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace pendlab::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, PendRangeAndFormats) {
  EXPECT_EQ(invoke({"pend", "0..7"}).out, "1,1,1,2,3,4,6,8\n");
  EXPECT_EQ(invoke({"pend", "7", "--oracle"}).out, "8\n");
  EXPECT_EQ(invoke({"pend", "5..7", "--mod", "3"}).out, "1,0,2\n");
  EXPECT_EQ(invoke({"pend", "5..7", "--backend", "exact", "--mod", "3"}).out, "1,0,2\n");
  EXPECT_EQ(invoke({"pend", "1953", "--backend", "parity"}).out, "0\n");
  EXPECT_EQ(invoke({"pend", "2..3", "--format", "csv"}).out, "n,value\n2,1\n3,2\n");
  EXPECT_EQ(invoke({"pend", "0..2", "--format", "json"}).out, "[1,1,1]\n");
}

TEST(Cli, ExpandQuotient) {
  EXPECT_EQ(invoke({"expand", "1:1", "8"}).out, "1,-1,-1,0,0,1,0,1\n");
  EXPECT_EQ(invoke({"expand", "3:2,1:-3", "8"}).out, "1,3,9,20,45,90,176,324\n");
}

TEST(Cli, UsageErrorsExitThree) {
  EXPECT_EQ(invoke({"expand", "1:x", "8"}).code, kExitUsage);
  EXPECT_EQ(invoke({"expand", "1:1", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"pend", "7..3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"pend", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"pend", "3", "--mod", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "theorem", "--p", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  const Result bad = invoke({"expand", "1:x", "8"});
  EXPECT_NE(bad.err.find("position 2"), std::string::npos) << bad.err;
}

TEST(Cli, VerifyExitCodesFollowOutcome) {
  EXPECT_EQ(invoke({"verify", "theta", "--N", "200"}).code, kExitVerified);
  EXPECT_EQ(invoke({"verify", "identity", "--N", "5000"}).code, kExitVerified);
  EXPECT_EQ(invoke({"verify", "sellers", "--N", "5000"}).code, kExitVerified);
  // With N = 100 only the 27n+19 family has an index in range.
  EXPECT_EQ(invoke({"verify", "sellers", "--N", "100"}).code, kExitInsufficientRange);
  EXPECT_EQ(invoke({"verify", "theorem", "--p", "5", "--N", "20000"}).code, kExitRefuted);
  EXPECT_EQ(invoke({"verify", "newman", "--p", "5", "--n-max", "5"}).code, kExitRefuted);
}

TEST(Cli, TheoremReportShape) {
  const Result r = invoke({"verify", "theorem", "--p", "5,7", "--N", "20000", "--format", "json"});
  const auto body = nlohmann::json::parse(r.out);
  EXPECT_EQ(body["target"], "theorem");
  ASSERT_EQ(body["primes"].size(), 2U);
  EXPECT_EQ(body["primes"][0]["p"], 5);
  EXPECT_EQ(body["primes"][0]["case"], "case-ii");
  const auto& first = body["primes"][0]["families"][0];
  for (const char* key : {"A", "B", "mod", "expected", "status", "n_checked", "max_index", "counterexamples", "provenance"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
  EXPECT_EQ(invoke({"verify", "theorem", "--p", "5,7", "--N", "20000", "--format", "json"}).out, r.out);
}

TEST(Cli, NewmanResidueBackend) {
  const Result r = invoke({"verify", "newman", "--p", "5", "--n-max", "5", "--backend", "residue", "--mod",
                           "1000000007"});
  EXPECT_EQ(r.code, kExitRefuted);
  const auto body = nlohmann::json::parse(r.out);
  EXPECT_EQ(body["results"][0]["alpha"], "2505");
  EXPECT_EQ(invoke({"verify", "newman", "--backend", "parity"}).code, kExitUsage);
}

}  // namespace
}  // namespace pendlab::cli
