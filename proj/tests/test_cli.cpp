#include <gtest/gtest.h>

#include "knotcat/cli.hpp"

using namespace knotcat;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, AlexanderOfTrefoil) {
  Result r = run({"alex", "--braid", "s1 s1 s1", "-n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["polynomial"], "t^2 - t + 1");
  Result fox = run({"alex", "--braid", "s1 s1 s1", "--method", "fox"});
  EXPECT_EQ(Json::parse(fox.out)["polynomial"], "t^2 - t + 1");
}

TEST(Cli, VerifyGmvPasses) {
  Result r = run({"verify", "--op", "gmv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, VerifyFailureExitsOne) {
  Result r = run({"verify", "--op", "negative_control"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(Json::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, IdentityClosureIsFree) {
  Result r = run({"closure", "--op", "artin", "--braid", "", "-n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["generators"].size(), 2u);
  EXPECT_TRUE(j["relators"].empty());
}

TEST(Cli, UsageErrorsNameTheFlag) {
  Result bad_braid = run({"alex", "--braid", "s5", "-n", "2"});
  EXPECT_EQ(bad_braid.code, 2);
  EXPECT_NE(bad_braid.err.find("--braid"), std::string::npos);
  Result bad_op = run({"closure", "--op", "nonsense", "--braid", "s1"});
  EXPECT_EQ(bad_op.code, 2);
  EXPECT_NE(bad_op.err.find("--op"), std::string::npos);
  Result bad_q = run({"points", "--braid", "s1 s1 s1", "-q", "6"});
  EXPECT_EQ(bad_q.code, 2);
  EXPECT_NE(bad_q.err.find("-q"), std::string::npos);
  Result bad_group = run({"homcount", "--braid", "s1", "--group", "a5"});
  EXPECT_EQ(bad_group.code, 2);
  EXPECT_NE(bad_group.err.find("--group"), std::string::npos);
  Result link = run({"hc0", "--braid", "s1 s1"});
  EXPECT_EQ(link.code, 2);
  EXPECT_NE(link.err.find("--braid"), std::string::npos);
  Result unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("frobnicate"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"alex"}).code, 2);
}

TEST(Cli, PointsAtPinnedUnits) {
  Result r = run({"points", "--braid", "", "-n", "1", "-q", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["count"], 7);
  Result pinned = run({"points", "--braid", "s1 s1 s1", "-q", "5", "--lambda", "1", "--mu", "1"});
  ASSERT_EQ(pinned.code, 0) << pinned.err;
  EXPECT_EQ(Json::parse(pinned.out)["per_units"].size(), 1u);
}

TEST(Cli, HomCountAndInvariance) {
  Result h = run({"homcount", "--braid", "s1 s1 s1", "--group", "s3"});
  EXPECT_EQ(Json::parse(h.out)["count"], 12);
  Result inv = run({"invariance", "--braid", "s1 s1 s1", "--moves", "conj,stab+,stab-", "--invariant", "homcount_s3"});
  ASSERT_EQ(inv.code, 0) << inv.err;
  Json j = Json::parse(inv.out);
  EXPECT_TRUE(j["all_equal"].get<bool>());
  EXPECT_EQ(j["values"].size(), 4u);
}

TEST(Cli, OutputIsDeterministic) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"dga", "--braid", "s1 s1 s1"}, {"fnc", "--braid", "s1 s1"},
        {"closure", "--op", "gmv", "--braid", "s1 s2^-1", "-n", "3"}, {"hc0", "--braid", "s1 s2^-1 s1 s2^-1"}}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, TextOutput) {
  Result r = run({"alex", "--braid", "s1 s1 s1", "--text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("t^2 - t + 1"), std::string::npos);
  EXPECT_THROW(Json::parse(r.out), Json::parse_error);
}

TEST(Cli, CorpusSuites) {
  Result r = run({"corpus", "--suite", "oracles"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
  EXPECT_EQ(run({"corpus", "--suite", "nope"}).code, 2);
}
