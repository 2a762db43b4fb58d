#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef ANGULATE_CLI_PATH

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string cmd = std::string("\"") + ANGULATE_CLI_PATH + "\" " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("angulate_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SampleMapSingleFace) {
  const CliResult r = cli("sample-map --p 2 --faces 1 --seed 7 --out " + path("m.pmap"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::string text = slurp(path("m.pmap"));
  EXPECT_NE(text.find("vertices 3 edges 2"), std::string::npos) << text;
  const CliResult v = cli("validate " + path("m.pmap"));
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_EQ(v.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, SampleMobileAndValidate) {
  ASSERT_EQ(cli("sample-mobile --p 3 --faces 40 --seed 1 --out " + path("a.pmobile")).status, 0);
  const CliResult v = cli("validate " + path("a.pmobile"));
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_NE(v.out.find("PASS mobile"), std::string::npos);
}

TEST_F(Cli, ValidateRejectsTamperedMap) {
  ASSERT_EQ(cli("sample-map --p 2 --faces 30 --seed 2 --out " + path("m.pmap")).status, 0);
  std::string text = slurp(path("m.pmap"));
  const auto pos = text.rfind("\ne ");
  ASSERT_NE(pos, std::string::npos);
  text = text.substr(0, pos) + "\ne 1 1\n";
  std::ofstream(path("bad.pmap")) << text;
  const CliResult v = cli("validate " + path("bad.pmap"));
  EXPECT_EQ(v.status, 1) << v.out;
  EXPECT_NE(v.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, EnumerateSingleFace) {
  const CliResult r = cli("enumerate --p 2 --faces 1 --variant rooted");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("count 2\n", 0), 0u) << r.out;
}

TEST_F(Cli, BadParameterExitsTwo) {
  EXPECT_EQ(cli("sample-map --p 1 --faces 3 --seed 1").status, 2);
  EXPECT_EQ(cli("no-such-command").status, 2);
  EXPECT_EQ(cli("experiment not-an-experiment --seed 1").status, 2);
}

TEST_F(Cli, ExperimentWithConfig) {
  std::ofstream(path("suite.json"))
      << R"({"name": "invariant-suite", "p_values": [2, 3], "n_values": [50], "samples": 5, "seed": 4})";
  const CliResult r = cli("experiment --config " + path("suite.json") + " --out " + path("out"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(fs::exists(path("out/invariant-suite.csv")));
  EXPECT_TRUE(fs::exists(path("out/invariant-suite.json")));
  EXPECT_NE(r.out.find("PASS map_invariants"), std::string::npos);
}

TEST_F(Cli, ExperimentFailureExitsOne) {
  std::ofstream(path("suite.json")) << R"({"name": "invariant-suite", "p_values": [2], "n_values": [50],
      "samples": 3, "seed": 4, "inject_fault": true})";
  const CliResult r = cli("experiment --config " + path("suite.json") + " --out " + path("out"));
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, ExperimentOutputIsReproducible) {
  const std::string args = "experiment two-point-scaling --faces 256,512,1024 --samples 10 --seed 9 --format both";
  const int first = cli(args + " --out " + path("a")).status;
  EXPECT_TRUE(first == 0 || first == 1);
  EXPECT_EQ(cli("--threads 2 " + args + " --out " + path("a2")).status, first);
  ASSERT_TRUE(fs::exists(path("a/two-point-scaling.csv")));
  EXPECT_EQ(slurp(path("a/two-point-scaling.csv")), slurp(path("a2/two-point-scaling.csv")));
}

TEST_F(Cli, MetricCsv) {
  const CliResult r = cli("metric --p 2 --faces 100 --seed 3 --radii 1,2,3");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("p,n,seed,stat,value\n", 0), 0u);
  EXPECT_NE(r.out.find("lemma31_violations,0"), std::string::npos);
  EXPECT_NE(r.out.find("ball_count[r=3]"), std::string::npos);
}

TEST_F(Cli, ExcursionCsv) {
  const CliResult r = cli("excursion --grid 16 --faces 256 --seed 3 --out " + path("x.csv") + " --dstar " +
                    path("d.csv"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(slurp(path("x.csv")).rfind("t,e,z\n", 0), 0u);
  EXPECT_FALSE(slurp(path("d.csv")).empty());
}

#endif
