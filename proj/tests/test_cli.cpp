#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

const std::string kCli = KNESERLAB_CLI;

std::string temp_path(const std::string& name) { return testing::TempDir() + "kneserlab_cli_" + name; }

int run(const std::string& args) {
  const int status = std::system((kCli + " " + args + " 2>/dev/null >/dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, CleanRunExitsZero) {
  const std::string out = temp_path("clean.json");
  ASSERT_EQ(run("run --tower gf:2:4 --suite hou_bound,submodularity --out " + out), 0);
  const auto report = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(report["summary"]["status"], "ok");
  EXPECT_EQ(report["suites"].size(), 2u);
  EXPECT_EQ(report["tower"]["dim"], 4);
  EXPECT_TRUE(nlohmann::json::parse(slurp(out + ".timing.json")).is_object());
  std::remove(out.c_str());
  std::remove((out + ".timing.json").c_str());
}

TEST(Cli, InjectedFaultExitsOne) {
  const std::string out = temp_path("fault.json");
  ASSERT_EQ(run("run --tower gf:2:4 --suite hou_bound --inject-fault --out " + out), 1);
  const auto report = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(report["summary"]["status"], "violation");
  const auto& v = report["suites"][0]["violations"][0];
  const std::string replay = v["replay"];
  ASSERT_EQ(replay.rfind("kneserlab replay ", 0), 0u);
  const std::string again = temp_path("replay.json");
  EXPECT_EQ(run(replay.substr(std::string("kneserlab ").size()) + " --out " + again), 1);
  const auto r = nlohmann::json::parse(slurp(again));
  EXPECT_EQ(r["violations"][0]["check"], v["check"]);
  EXPECT_EQ(r["violations"][0]["witness"], v["witness"]);
  std::remove(out.c_str());
  std::remove(again.c_str());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("run --suite nonsense"), 2);
  EXPECT_EQ(run("run --format xml"), 2);
  EXPECT_EQ(run("replay --suite lemmas"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("run --tower gf:2:4 --sigma 1,0 --suite lemmas"), 2);
}

TEST(Cli, TowerErrorsExitThree) {
  EXPECT_EQ(run("run --tower gf:4:2"), 3);
  EXPECT_EQ(run("run --tower gf:2:4:x^4+1"), 3);
  EXPECT_EQ(run("run --tower gf:2:65"), 3);
}

TEST(Cli, VersionAndCsv) {
  EXPECT_EQ(run("--version"), 0);
  const std::string out = temp_path("report.csv");
  ASSERT_EQ(run("run --tower gf:2:3 --suite group --format csv --out " + out), 0);
  EXPECT_EQ(slurp(out).rfind("suite,mode,check,", 0), 0u);
  std::remove(out.c_str());
  std::remove((out + ".timing.json").c_str());
}

TEST(Cli, JobsDoNotChangeTheReport) {
  const std::string a = temp_path("jobs1.json"), b = temp_path("jobs3.json");
  ASSERT_EQ(run("run --tower gf:2:5 --jobs 1 --out " + a), 0);
  ASSERT_EQ(run("run --tower gf:2:5 --jobs 3 --out " + b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  for (const auto& p : {a, b}) {
    std::remove(p.c_str());
    std::remove((p + ".timing.json").c_str());
  }
}
