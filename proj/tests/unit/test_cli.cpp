#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "pw/witness.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PW_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run("--format json " + args);
  EXPECT_EQ(r.status, 0) << args;
  return nlohmann::json::parse(r.out);
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() / ("pw_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
};

}  // namespace

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("alpha --kappa '3|1'").status, 2);
  EXPECT_EQ(run("verify no-such-suite").status, 2);
  EXPECT_EQ(run("--format yaml verify characters").status, 2);
}

TEST_F(Cli, MissingWitnessFileNamesPath) {
  const std::string missing = (dir / "absent.json").string();
  const std::string cmd = std::string(PW_BINARY) + " alpha --witness " + missing + " --kappa '3|1' 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) text += buf.data();
  const int raw = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(raw), 2);
  EXPECT_NE(text.find(missing), std::string::npos);
}

TEST_F(Cli, AlphaFromWitnessFile) {
  const auto file = dir / "w.json";
  std::ofstream(file) << R"({"n": 4, "d": 2, "coeffs": [{"partition": [4], "c": 9}, {"partition": [3, 1], "c": -1}]})";
  const auto j = run_json("alpha --witness " + file.string() + " --kappa '1|3'");
  const auto w = pw::make_witness(4, 2, std::vector<double>{9.0, -1.0, 0.0});
  EXPECT_NEAR(j.at("alpha").get<double>(), pw::alpha_semisep_closed(w).value, 1e-12);
  EXPECT_EQ(j.at("method"), "closed-form");
  EXPECT_EQ(j.at("schema"), "pw/1");
  EXPECT_TRUE(j.contains("command_line"));
  EXPECT_EQ(j.at("seed"), 0);
}

TEST_F(Cli, GenProjectorsUsesCache) {
  const std::string base = "--cache-dir " + dir.string() + " --format json gen-projectors -d 2 -n 3";
  auto first = nlohmann::json::parse(run(base).out);
  auto second = nlohmann::json::parse(run(base).out);
  EXPECT_EQ(first.at("cache"), "miss");
  EXPECT_EQ(second.at("cache"), "hit");
  EXPECT_TRUE(fs::exists(dir / "proj_d2_n3.bin"));
  auto refreshed = nlohmann::json::parse(run(base + " --refresh").out);
  EXPECT_EQ(refreshed.at("cache"), "miss");
}

TEST_F(Cli, VerifySuiteLines) {
  const auto r = run("verify characters");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("criterion  1 characters"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(Cli, SampleReport) {
  const auto j = run_json("--seed 5 sample --state werner:0 --coeffs 4,-1,0 -n 3 -d 3 --kappa '1|1|1' -N 20000");
  for (const char* key : {"witness", "alpha_provenance", "N", "delta", "estimate", "radius", "detected", "seed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_TRUE(j.at("detected").get<bool>());
  const auto again = run_json("--seed 5 sample --state werner:0 --coeffs 4,-1,0 -n 3 -d 3 --kappa '1|1|1' -N 20000");
  EXPECT_EQ(j.at("estimate"), again.at("estimate"));
}

TEST_F(Cli, DetectAndSeesaw) {
  auto j = run_json("detect --coeffs 4,-1,0 -n 3 -d 3 --probs 0.1,0.9,0 --alpha 0");
  EXPECT_TRUE(j.at("detected").get<bool>());
  j = run_json("seesaw --coeffs 0,1,0,-1,0 -n 4 -d 3 --kappa '2|2' --restarts 10");
  EXPECT_NEAR(j.at("value").get<double>(), -0.5, 1e-8);
  EXPECT_EQ(run("detect --coeffs 4,-1,0 -n 3 -d 3 --probs 0.1,0.9,0").status, 2);
}

TEST_F(Cli, WernerCsvAndOutFile) {
  const auto out = dir / "werner.csv";
  EXPECT_EQ(run("--format csv --out " + out.string() + " classify-werner --resolution 10").status, 0);
  std::ifstream in(out);
  std::string first, header;
  std::getline(in, first);
  std::getline(in, header);
  EXPECT_EQ(first.rfind("# ", 0), 0u);
  EXPECT_EQ(header, "p,sep1,sep2,bisep,fppt_min_eigenvalue,label");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 11);
}

TEST_F(Cli, ImmanantCsv) {
  const auto r = run("--format csv immanant-test --size 3 --samples 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("inequality_id,n,matrix_seed,margin"), std::string::npos);
}
