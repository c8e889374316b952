#include "qmg/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

using namespace qmg;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qmg_cli_test_" + name);
}

}  // namespace

TEST(Cli, ClassicalPayoff) {
  const Result r = run_args({"classical", "--n", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("3/16"), std::string::npos);
}

TEST(Cli, PayoffOfGhzEquilibrium) {
  const Result r = run_args({"payoff", "--n", "6", "--state", "ghz"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("0.3125"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_args({"payoff", "--x", "1.5"}).code, kExitUsage);
  EXPECT_EQ(run_args({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run_args({}).code, kExitUsage);
  const Result r = run_args({"payoff", "--gamma", "3"});
  EXPECT_NE(r.err.find("gamma"), std::string::npos);
}

TEST(Cli, AsymmetricProfileRejectedForSweeps) {
  EXPECT_EQ(run_args({"sweep-x", "--n", "2", "--profile", "0,0,0;1,0,0"}).code, kExitUsage);
}

TEST(Cli, NashCheckSummaries) {
  const Result yes = run_args({"nash-check", "--n", "4", "--state", "ghz", "--grid", "9"});
  EXPECT_EQ(yes.code, kExitOk);
  EXPECT_NE(yes.out.find("is_nash=true"), std::string::npos);
  const Result no = run_args({"nash-check", "--n", "4", "--state", "ghz", "--symmetric", "0,0,0", "--grid", "9"});
  EXPECT_EQ(no.code, kExitOk);
  EXPECT_NE(no.out.find("is_nash=false"), std::string::npos);
}

TEST(Cli, SweepWritesTable) {
  const auto p = temp_path("sweep.csv");
  const Result r = run_args({"sweep-x", "--n", "6", "--steps", "5", "--out", p.string()});
  EXPECT_EQ(r.code, kExitOk);
  const std::string csv = slurp(p);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,payoff_simulated,payoff_analytic,abs_error");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  std::filesystem::remove(p);
}

TEST(Cli, DeviationTableJson) {
  const auto p = temp_path("br.json");
  const Result r = run_args({"best-response", "--n", "4", "--grid", "7", "--out", p.string(), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(slurp(p));
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0]["grid_resolution"].get<int>(), 7);
  EXPECT_TRUE(j[0].contains("max_gain"));
  EXPECT_TRUE(j[0]["is_nash_within_tol"].get<bool>());
  std::filesystem::remove(p);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const auto a = temp_path("a.csv"), b = temp_path("b.csv");
  for (const auto& p : {a, b}) {
    ASSERT_EQ(run_args({"surface", "--n", "4", "--theta-steps", "9", "--alpha-steps", "9", "--out", p.string()}).code,
              kExitOk);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, UnwritableOutputFails) {
  EXPECT_EQ(run_args({"classical", "--n", "4", "--out", "/nonexistent-dir/x/out.csv"}).code, kExitFailure);
}

TEST(Cli, ConjectureAtFullEntanglement) {
  const Result r = run_args({"conjecture", "--n", "6", "--gamma", "pi/2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("simulated 0.3125"), std::string::npos) << r.out;
}
