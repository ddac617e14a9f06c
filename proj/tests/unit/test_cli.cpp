#include <gtest/gtest.h>

#include "quiverfg/cli.hpp"

using qfg::cli::run;

namespace {

std::string data(const std::string& name) { return std::string(QUIVERFG_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, BuildReportsInvariants) {
  auto r = run({"--machine", "build", data("example4.alg")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.text.find("dim = 14\n"), std::string::npos);
  EXPECT_NE(r.text.find("cartan.column.1 = (2,2,1)\n"), std::string::npos);
  EXPECT_NE(r.text.find("projective.3 = 3 1 2 3\n"), std::string::npos);
}

TEST(Cli, NakayamaVerdicts) {
  auto yes = run({"--machine", "nakayama", data("example4.alg")});
  EXPECT_EQ(yes.exit_code, 0);
  EXPECT_NE(yes.text.find("kupisch = (4,5,5)"), std::string::npos);
  auto no = run({"nakayama", data("kxy.alg")});
  EXPECT_EQ(no.exit_code, qfg::cli::kNegative);
  EXPECT_NE(no.text.find("nakayama: false"), std::string::npos);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).exit_code, qfg::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).exit_code, qfg::cli::kUsage);
  EXPECT_EQ(run({"build", data("missing.alg")}).exit_code, qfg::cli::kUsage);
  EXPECT_EQ(run({"--field", "Fp(6)", "build", data("example4.alg")}).exit_code, qfg::cli::kUsage);
  EXPECT_EQ(run({"--selector", "odd", "fg", data("kx2.alg")}).exit_code, qfg::cli::kUsage);
  EXPECT_EQ(run({"--window", "3..1", "derived-compare", data("example4.alg"), "--tilting", "P1+P2+S2", "--pairs",
                 "S1,S1"})
                .exit_code,
            qfg::cli::kUsage);
  EXPECT_EQ(run({"mutate", data("example4.alg"), "--module", "P1+P2+P3", "--sequence", "4"}).exit_code,
            qfg::cli::kUsage);
  auto help = run({"--help"});
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_NE(help.text.find("derived-compare"), std::string::npos);
}

TEST(Cli, TiltingRefusals) {
  EXPECT_EQ(run({"tilt-check", data("example4.alg"), "--module", "P1+P2"}).exit_code, qfg::cli::kNegative);
  auto r = run({"derived-compare", data("example4.alg"), "--tilting", "P1+S2", "--pairs", "S1,S1"});
  EXPECT_EQ(r.exit_code, qfg::cli::kNegative);
}

TEST(Cli, MutateAndEndo) {
  auto m = run({"--machine", "mutate", data("example4.alg"), "--module", "P1+P2+P3", "--sequence", "3"});
  EXPECT_EQ(m.exit_code, 0);
  EXPECT_NE(m.text.find("step.1.complement = (0,1,0)"), std::string::npos);
  auto e = run({"endo", data("example4.alg"), "--module", "P1+P2+S2"});
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_NE(e.text.find("End_A(T)^op"), std::string::npos);
  EXPECT_NE(e.text.find("vertices = 1 2 3"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  std::vector<std::string> args{"--machine", "derived-compare", data("example4.alg"), "--tilting", "P1+P2+S2",
                                "--pairs", "S1,S2;S3,S1", "--window", "-1..2"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.text, b.text);
  EXPECT_NE(a.text.find("invariance = pass"), std::string::npos);
}

TEST(Cli, Scenarios) {
  for (const auto& s : qfg::cli::scenarios()) {
    auto r = run({"reproduce", s});
    EXPECT_EQ(r.exit_code, 0) << r.text;
    EXPECT_NE(r.text.find("ALL CHECKS PASSED"), std::string::npos);
  }
  EXPECT_EQ(run({"reproduce", "nope"}).exit_code, qfg::cli::kUsage);
}
