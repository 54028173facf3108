#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(KC_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip_runtime(const std::string& s) {
  return std::regex_replace(s, std::regex("\"runtime_ms\": [0-9.eE+-]+"), "\"runtime_ms\": 0");
}

}  // namespace

TEST(Cli, ThresholdTableCsv) {
  const CliRun r = run("thresholds table --m-min 6 --m-max 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m,n,lambda1"), std::string::npos);
  EXPECT_NE(r.out.find("6,12,"), std::string::npos);
  EXPECT_NE(r.out.find("0.933050447902,1979/2121,lambda2,holds"), std::string::npos);
}

TEST(Cli, ThresholdTableJsonHasSchema) {
  const CliRun r = run("thresholds table --m-min 6 --m-max 8 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["rows"][0]["lambda"]["exact"], "1979/2121");
  EXPECT_EQ(j["rows"][0]["lambda"]["decimal"], "0.933050447902");
  EXPECT_EQ(j["certificates"][0]["verdict"], "holds");
}

TEST(Cli, RadonHurwitzLastRow) {
  const CliRun r = run("lie rh --n-max 16");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(r.out.rfind("\n", r.out.size() - 2) + 1), "16,9\n");
}

TEST(Cli, ProjectorRatioAlias) {
  const CliRun r = run("fiber verify --lemma 5.4norm --n 8");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["certificates"][0]["witnesses"]["ratio"], "1/24");
  EXPECT_EQ(j["certificates"][0]["verdict"], "holds");
}

TEST(Cli, FiberIdentityDeterministic) {
  const CliRun a = run("fiber verify --lemma tangent-identity --n 4 --k 2 --trials 4 --seed 11");
  const CliRun b = run("fiber verify --lemma 4.3i --n 4 --k 2 --trials 4 --seed 11 --workers 3");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(strip_runtime(a.out), strip_runtime(b.out));
  EXPECT_EQ(nlohmann::json::parse(a.out)["certificates"][0]["witnesses"]["sections_checked"], 4);
}

TEST(Cli, LieCommands) {
  const CliRun ex = run("lie exclusion --p-max 20");
  ASSERT_EQ(ex.code, 0);
  const auto j = nlohmann::json::parse(ex.out);
  EXPECT_EQ(j["certificates"][0]["witnesses"]["survivors"].size(), 3u);
  const CliRun cubic = run("lie e6-cubic --format csv");
  ASSERT_EQ(cubic.code, 0);
  EXPECT_NE(cubic.out.find("3,\"[0,0,0,0,0,0]\",1,1"), std::string::npos);
}

TEST(Cli, CurvatureBatchSmall) {
  const CliRun r = run("curvature bishop-goldberg --n 4 --lambda 0.95 --trials 2 --restarts 4 --seed 3 --tol 1e-7");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["certificates"][0]["claim_id"], "curvature.pinched_batch");
  EXPECT_TRUE(j["all_hold"].get<bool>());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("thresholds table --m-min 7").code, 2);
  EXPECT_EQ(run("thresholds verify --claim nope").code, 2);
  EXPECT_EQ(run("fiber verify --lemma nope").code, 2);
  EXPECT_EQ(run("fiber verify --lemma 4.3i --n 5").code, 2);
  EXPECT_EQ(run("lie exclusion --p-max 5").code, 2);
  EXPECT_EQ(run("curvature bishop-goldberg --lambda 0.5").code, 2);
}

TEST(Cli, PartialFailureExitsOne) {
  // the chain inequalities only start at n = 10
  const CliRun r = run("thresholds verify --claim chain --n-min 9 --n-max 20");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["certificates"][0]["verdict"], "fails");
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }
