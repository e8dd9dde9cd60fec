#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QGC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qgc_cli_" + std::to_string(::getpid()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SearchCycleFive) {
  const auto r = run("search --family cycle --n 5 --D 2 --delta 2");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["K"], 6);
  EXPECT_FALSE(j["additive"].get<bool>());
  EXPECT_TRUE(j["exhaustive"].get<bool>());
}

TEST_F(Cli, SearchDegenerateRefusal) {
  const auto r = run("search --family cycle --n 4 --D 2 --delta 3");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["K"], 0);
  EXPECT_EQ(j["reason"], "diagonal-distance");
}

TEST_F(Cli, SearchWheelAdditive) {
  const auto r = run("search --family wheel --n 8 --D 2 --delta 3 --additive-only --out " + path("w.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(slurp(path("w.json")))["K"], 8);
}

TEST_F(Cli, SearchFromGraphFile) {
  const auto r = run("search --graph " + std::string(QGC_SAMPLES_DIR) + "/cycle5.graph --delta 3");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["K"], 2);
}

TEST_F(Cli, Construct) {
  auto j = nlohmann::json::parse(run("construct --method star-odd --n 9").out);
  EXPECT_EQ(j["K"], 93);
  j = nlohmann::json::parse(run("construct --method partition --family bar --n 6 --D 4").out);
  EXPECT_EQ(j["K"], 256);
  j = nlohmann::json::parse(run("construct --method hypercube16").out);
  EXPECT_EQ(j["K"], 128);
  EXPECT_EQ(j["delta"], 4);
  EXPECT_EQ(run("construct --method partition --family bar --n 5 --D 2").status, 1);
  const auto v1 = run("construct --method partition --family hypercube --n 8 --D 2 --v1 1,4,6,7");
  ASSERT_EQ(v1.status, 0) << v1.out;
  EXPECT_EQ(nlohmann::json::parse(v1.out)["K"], 64);
}

TEST_F(Cli, TableCycles) {
  const auto r = run("table --family cycle --D 2 --n-min 4 --n-max 8 --delta 2,3");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("delta=2\t4\t6\t16\t22\t64\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("delta=3\t0\t2\t1\t2\t8\n"), std::string::npos) << r.out;
}

TEST_F(Cli, StabilizerOfRepetitionCode) {
  ASSERT_EQ(run("search --family cycle --n 5 --D 2 --delta 3 --out " + path("rep.json")).status, 0);
  const auto r = run("stabilizer --code " + path("rep.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("|C| = 2, |S| = 16"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("pass order"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, StabilizerOfNonadditiveCode) {
  ASSERT_EQ(run("search --family cycle --n 5 --D 2 --delta 2 --out " + path("k6.json")).status, 0);
  EXPECT_EQ(run("stabilizer --code " + path("k6.json")).status, 1);
}

TEST_F(Cli, VerifyGoodAndCorrupted) {
  ASSERT_EQ(run("search --family cycle --n 5 --D 2 --delta 3 --out " + path("rep.json")).status, 0);
  const auto good = run("verify --code " + path("rep.json") + " --oracle");
  EXPECT_EQ(good.status, 0) << good.out;

  auto j = nlohmann::ordered_json::parse(slurp(path("rep.json")));
  j["codewords"][1] = "11110";
  std::ofstream(path("bad.json")) << j.dump(2);
  const auto bad = run("verify --code " + path("bad.json") + " --oracle");
  EXPECT_EQ(bad.status, 3) << bad.out;
  EXPECT_NE(bad.out.find("witness"), std::string::npos) << bad.out;
}

TEST_F(Cli, VerifyShippedHypercube) {
  const auto r = run("verify --code " + std::string(QGC_DATA_DIR) + "/hypercube16_code.json");
  EXPECT_EQ(r.status, 0) << r.out;
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("search --family cycle --n 5 --D 2").status, 1);
  EXPECT_EQ(run("search --family torus --n 5 --D 2 --delta 2").status, 1);
  EXPECT_EQ(run("verify --code /nonexistent.json").status, 1);
  EXPECT_EQ(run("search --family cycle --n 9 --D 2 --delta 2 --budget 0.000001").status, 2);
}
