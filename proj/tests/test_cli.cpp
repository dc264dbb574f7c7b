#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DISC_VAL_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  RunResult r = run(args);
  EXPECT_EQ(r.exit_code, expect_code) << args << "\n" << r.out;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, DiscExample) {
  auto j = run_json("disc --ring Zp:5 --vars 3 --degree 2 \"x0^2+x1^2+5*x2^2\" --quiet");
  EXPECT_EQ(j["valuation"], 1);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["schema"], 1);
}

TEST(Cli, DiscOverZZ) {
  auto j = run_json("disc --ring ZZ --vars 2 \"3*x0^2 + x0*x1 - 2*x1^2\" --quiet");
  // b^2 - 4ac = 1 + 24 = 25
  EXPECT_TRUE(j["value"] == "25" || j["value"] == "-25");
  EXPECT_FALSE(j.contains("valuation"));
}

TEST(Cli, SingularReport) {
  auto j = run_json("singular --field Fq:7 --vars 3 --quiet \"x2*(x1-x0)*(x1-2*x0)\"");
  EXPECT_EQ(j["dimension"], 0);
  EXPECT_EQ(j["r"], 3);
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["contains_line"], "false");
}

TEST(Cli, ClassifyWeierstrassNode) {
  auto j = run_json("classify --ring Zp:5 --vars 3 --quiet \"x1^2*x2 - x0^3 - x0^2*x2 - 5*x2^3\"");
  EXPECT_EQ(j["valuation"], 1);
  EXPECT_EQ(j["equivalence_holds"], true);
  EXPECT_EQ(j["regular"], "regular");
  EXPECT_EQ(j["nondeg_single_point"], true);
}

TEST(Cli, VminModes) {
  auto exact = run_json("vmin --field Fq:7 --vars 3 --exact-quadric --quiet \"x0^2+x1^2\"");
  EXPECT_EQ(exact["vmin"], 1);
  auto sampled = run_json("vmin --field Fq:5 --vars 3 --trials 16 --seed 9 --quiet \"x0^3+x1^3+x2^3\"");
  EXPECT_EQ(sampled["vmin_upper_bound"], 0);
}

TEST(Cli, MakeCommands) {
  auto w = run_json("make weierstrass --ring Zp:5 --a2 1 --a6 5 --quiet");
  EXPECT_EQ(w["classical_valuation"], 1);
  EXPECT_EQ(w["macaulay_valuation"], 1);
  auto q = run_json("make quadric --kind smooth-split --n 3 --field Fq:7 --quiet");
  EXPECT_EQ(q["poly"], "x0*x1 + x2*x3");
  auto lf = run_json("make line-family --field Fq:7 --vars 3 --degree 3 --cs 1,2 --quiet");
  EXPECT_EQ(lf["verification"]["r"], 3);
  auto lm = run_json("make lemma93 --field Fq:101 --vars 3 --degree 5 --points \"1:0:0;0:0:1\" --seed 4 --quiet");
  EXPECT_EQ(lm["found"], true);
  EXPECT_EQ(lm["verification"]["r"], 2);
}

TEST(Cli, VerifySuite) {
  RunResult r = run("verify --suite prop3_1 --trials 10 --seed 7 --quiet");
  EXPECT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["instances"], 30);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("disc --ring Zp:5 --vars 3 \"x0^2 + bogus\" --quiet").exit_code, 2);
  EXPECT_EQ(run("disc --ring Zp:4 --vars 3 \"x0^2\" --quiet").exit_code, 2);  // 4 not prime
  EXPECT_EQ(run("verify --suite nope --quiet").exit_code, 2);
  EXPECT_EQ(run("disc --vars 3 \"x0^2\" --badflag").exit_code, 2);
  // inhomogeneous input to disc is a computation-level error path through
  // InvalidInputError -> usage-style exit 2 per the malformed-input rule
  EXPECT_EQ(run("disc --ring Zp:5 --vars 3 \"x0^2 + x1\" --quiet").exit_code, 2);
}

TEST(Cli, AllSkippedSuiteExitsFour) {
  // a Macaulay size cap of 1 makes every degree_scaling instance skip
  RunResult r = run("verify --suite degree_scaling --trials 1 --seed 3 --max-matrix 1 --quiet");
  EXPECT_EQ(r.exit_code, 4);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["instances"], j["skipped"].size());
}

TEST(Cli, ByteIdenticalOutput) {
  std::string cmd = "verify --suite degree_scaling --trials 2 --seed 11 --quiet";
  RunResult a = run(cmd), b = run(cmd);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  std::string cmd2 = "classify --ring Zp:7 --vars 3 --quiet \"x0^2+x1^2+7*x2^2\"";
  EXPECT_EQ(run(cmd2).out, run(cmd2).out);
}
