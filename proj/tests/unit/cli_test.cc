// Runs the gendiff executable and checks the exit-code and output contract.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gendiff_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name) const { return dir_ / name; }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
  }

  Result run(const std::string& args, const std::string& env = "") const {
    const std::string cmd = env + " " + std::string(GENDIFF_CLI) + " " + args + " > " +
                            file("stdout").string() + " 2> " + file("stderr").string();
    const int status = std::system(cmd.c_str());
    return {WEXITSTATUS(status), slurp(file("stdout")), slurp(file("stderr"))};
  }

  static json last_json_line(const std::string& text) {
    std::istringstream in(text);
    std::string line, last;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '{') last = line;
    }
    return json::parse(last);
  }

  fs::path dir_;
};

TEST_F(Cli, DecomposeWritesCertificate) {
  write("f.json", R"({"band_limit": 3, "coeffs": [{"n": 2, "re": 1, "im": 0}, {"n": 3, "re": 0, "im": 1}]})");
  auto r = run("decompose --alpha 1 --beta -1 --s 1 --seed 42 --in " + file("f.json").string() +
               " --out " + file("cert.json").string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# residual:"), std::string::npos);
  EXPECT_NE(r.out.find("# seed = 42"), std::string::npos);
  auto cert = json::parse(slurp(file("cert.json")));
  EXPECT_EQ(cert["shifts"].size(), 5u);
  EXPECT_LE(cert["residual"].get<double>(), 1e-10);
}

TEST_F(Cli, DecomposeIsReproducible) {
  write("f.json", R"({"band_limit": 4, "coeffs": [{"n": 0, "re": 1, "im": 0}, {"n": 4, "re": 0.5, "im": -1}]})");
  const std::string in = " --in " + file("f.json").string();
  ASSERT_EQ(run("decompose --seed 9" + in + " --out " + file("a.json").string()).code, 0);
  ASSERT_EQ(run("decompose --seed 9" + in + " --out " + file("b.json").string()).code, 0);
  EXPECT_EQ(slurp(file("a.json")), slurp(file("b.json")));
}

TEST_F(Cli, BoundScanRowsAndReproducibility) {
  const std::string args = "bound-scan --alpha 1 --beta -1 --s 1 --n-min 2 --n-max 100 --points 16384 --seed 7 --out ";
  auto r = run(args + file("scan.csv").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(file("scan.csv"));
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "n,estimate,std_error,points,epsilon,scheme,seed");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 99);

  ASSERT_EQ(run(args + file("scan2.csv").string()).code, 0);
  EXPECT_EQ(csv, slurp(file("scan2.csv")));
}

TEST_F(Cli, ThreadCapDoesNotChangeOutput) {
  const std::string args = "bound-scan --n-min -6 --n-max 6 --points 2048 --seed 3 --out ";
  ASSERT_EQ(run(args + file("a.csv").string(), "GENDIFF_THREADS=1").code, 0);
  ASSERT_EQ(run(args + file("b.csv").string(), "GENDIFF_THREADS=8").code, 0);
  EXPECT_EQ(slurp(file("a.csv")), slurp(file("b.csv")));
}

TEST_F(Cli, SolveOutsideRangeExitsTwo) {
  write("f.json", R"({"band_limit": 3, "coeffs": [{"n": 1, "re": 1, "im": 0}, {"n": 2, "re": 1, "im": 0}]})");
  auto r = run("solve --alpha 1 --beta -1 --s 1 --in " + file("f.json").string());
  EXPECT_EQ(r.code, 2);
  auto err = last_json_line(r.err);
  EXPECT_EQ(err["error"], "NotInRange");
  EXPECT_EQ(err["frequency"], 1);
}

TEST_F(Cli, SolveInRange) {
  write("f.json", R"({"band_limit": 2, "coeffs": [{"n": 2, "re": 1, "im": 0}]})");
  auto r = run("solve --alpha 1 --beta -1 --s 1 --in " + file("f.json").string());
  ASSERT_EQ(r.code, 0) << r.err;
  auto g = json::parse(r.out);
  EXPECT_NEAR(g["coeffs"][0]["re"].get<double>(), -1.0 / 3.0, 1e-15);
}

TEST_F(Cli, IoAndParseErrorsExitOne) {
  EXPECT_EQ(run("decompose --in " + file("missing.json").string()).code, 1);
  write("bad.json", "{not json");
  auto r = run("decompose --in " + file("bad.json").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(last_json_line(r.err)["error"], "SchemaError");
  write("dup.json", R"({"band_limit": 2, "coeffs": [{"n": 1, "re": 1, "im": 0}, {"n": 1, "re": 1, "im": 0}]})");
  EXPECT_EQ(run("criterion --in " + file("dup.json").string()).code, 1);
  EXPECT_EQ(run("bound-scan --bogus-flag").code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST_F(Cli, SharpnessSearchExhaustedExitsTwo) {
  auto r = run("sharpness --depth 400 --q-cap 100");
  EXPECT_EQ(r.code, 2);
  auto err = last_json_line(r.err);
  EXPECT_EQ(err["error"], "SearchExhausted");
  EXPECT_TRUE(err.contains("level"));
}

TEST_F(Cli, SharpnessTable) {
  auto r = run("sharpness --depth 1000 --out " + file("w.json").string() + " --csv " + file("w.csv").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(file("w.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "L,S_L,norm2,criterion");
  auto w = json::parse(slurp(file("w.json")));
  EXPECT_EQ(w["q_path"].size(), 1000u);
  EXPECT_EQ(w["c"].size(), 5u);
  EXPECT_TRUE(w.contains("report"));
}

TEST_F(Cli, PartitionScanColumns) {
  auto r = run("partition-scan --alpha 1 --beta -1 --n-min -10 --n-max 10");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "n,alpha,beta,cell_count,bound,max_len,len_bound,ok");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.back(), '1') << line;
  }
  EXPECT_EQ(rows, 19);
}

TEST_F(Cli, ConstantsAndIdentity) {
  auto c = run("constants --m 5 --s 1");
  ASSERT_EQ(c.code, 0);
  EXPECT_NEAR(json::parse(c.out)["M"].get<double>(), 9416.15, 0.01);
  EXPECT_EQ(run("constants --m 4 --s 1").code, 2);

  auto id = run("identity-check --n 2 --alpha 1 --beta -1 --s 1 --m 1 --epsilon 0.01");
  ASSERT_EQ(id.code, 0);
  EXPECT_LE(json::parse(id.out)["relative_difference"].get<double>(), 1e-6);
}

TEST_F(Cli, JCell) {
  auto r = run("j-cell --n 9 --alpha 1 --beta -1 --cells 0:0,1:1,2:2,3:3,4:5 --points 4096");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["results"][0]["within"].get<bool>());
  EXPECT_EQ(run("j-cell --n 9 --cells 4:0,4:0,4:0,4:0,4:0").code, 2);
}

TEST_F(Cli, CriterionWithMeasuresFile) {
  write("f.json", R"({"band_limit": 2, "coeffs": [{"n": 2, "re": 1, "im": 0}]})");
  write("m.json", R"([{"atoms": [{"x": 0, "re": -1, "im": 0}, {"x": 3.141592653589793, "re": -1, "im": 0}]}])");
  auto r = run("criterion --in " + file("f.json").string() + " --measures " + file("m.json").string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["criterion"].get<double>(), 0.25, 1e-15);
}

TEST_F(Cli, EverySubcommandHasHelp) {
  for (const char* sub : {"decompose", "criterion", "solve", "apply", "partition-scan", "bound-scan",
                          "identity-check", "j-cell", "sharpness", "constants"}) {
    auto r = run(std::string(sub) + " --help");
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_GT(r.out.size(), 100u) << sub;
  }
}

}  // namespace
