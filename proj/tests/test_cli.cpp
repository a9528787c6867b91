#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pcc/json_io.hpp"
#include "pcc/sweep.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " PCG_BIN " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pcg-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const fs::path golden = GOLDEN_DIR;

}  // namespace

TEST_F(Cli, GenDoublePentagonMatchesGolden) {
  auto r = run("gen --family doublePentagon");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(golden / "double_pentagon.json"));
}

TEST_F(Cli, GenExhaustiveK4) {
  auto r = run("gen --family exhaustive --n 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 203);
}

TEST_F(Cli, GenRamseyFailure) {
  auto r = run("gen --family randomNoMono --n 6 --k 2 --seed 3");
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, GenUnknownFamily) {
  EXPECT_NE(run("gen --family pentagon").code, 0);
}

TEST_F(Cli, ClassifyExitCodes) {
  ASSERT_EQ(run("gen --family doublePentagon --out " + path("dp.json")).code, 0);
  auto r = run("classify " + path("dp.json"));
  EXPECT_EQ(r.code, 11);
  EXPECT_EQ(r.out, slurp(golden / "classify_double_pentagon.json"));

  ASSERT_EQ(run("gen --family directedExample --n 6 --out " + path("de.json")).code, 0);
  r = run("classify " + path("de.json"));
  EXPECT_EQ(r.code, 10);
  EXPECT_EQ(r.out, slurp(golden / "classify_directed6.json"));

  ASSERT_EQ(run("gen --family randomDegenerate --n 7 --seed 2 --out " + path("rd.json")).code, 0);
  r = run("classify " + path("rd.json"));
  EXPECT_TRUE(r.code == 0 || r.code == 10);
  EXPECT_EQ(pcc::Json::parse(r.out).at("tag"), r.code == 0 ? "a" : "b");

  std::ofstream(path("mono.json")) << R"({"n":4,"edges":[[0,1,1],[0,2,1],[0,3,1],[1,2,1],[1,3,1],[2,3,1]]})";
  EXPECT_EQ(run("classify " + path("mono.json")).code, 2);

  std::ofstream(path("broken.json")) << R"({"n":4,"edges":[)";
  EXPECT_EQ(run("classify " + path("broken.json")).code, 2);
  EXPECT_EQ(run("classify " + path("missing.json")).code, 2);
}

TEST_F(Cli, SweepIsDeterministic) {
  const std::string args = "sweep --family randomNoMono --n 7 --count 60 --oracle partial --seed 5";
  auto one = run(args + " --workers 1");
  auto three = run(args + " --workers 3");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
  EXPECT_FALSE(one.out.empty());

  auto env = run("sweep --family randomNoMono --n 7 --count 60 --oracle partial --seed 999", "PCG_SEED=5");
  EXPECT_EQ(env.out, one.out);
}

TEST_F(Cli, SweepExhaustiveK4Report) {
  auto r = run("sweep --family exhaustive --n 4 --oracle full");
  EXPECT_EQ(r.code, 0);
  ASSERT_EQ(run("sweep --family exhaustive --n 4 --oracle full --out " + path("rep.json")).code, 0);
  EXPECT_EQ(slurp(path("rep.json")), r.out);
  auto j = pcc::Json::parse(r.out);
  EXPECT_EQ(j.at("instances"), 203);
  for (const auto& [name, count] : j.at("failures").items()) EXPECT_EQ(count, 0) << name;
}
