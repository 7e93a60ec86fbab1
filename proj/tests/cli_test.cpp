#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace sset {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return testing::fixture(name).string(); }

TEST(Cli, StdPipesIntoValidate) {
  const Outcome made = run_cli({"std", "simplex", "2"});
  ASSERT_EQ(made.code, cli::kOk);
  const Outcome checked = run_cli({"validate"}, made.out);
  EXPECT_EQ(checked.code, cli::kOk) << checked.err;
}

TEST(Cli, KanCounterexampleOnInterval) {
  const Outcome r = run_cli({"kan", fx("delta1.sset"), "--max-dim", "2"});
  EXPECT_EQ(r.code, cli::kFailure);
  EXPECT_NE(r.out.find("[_, s0 . 0, 01]"), std::string::npos) << r.out;
}

TEST(Cli, TorusHomology) {
  const Outcome r = run_cli({"homology", fx("torus.sset"), "--deg", "1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("Z^2"), std::string::npos);
}

TEST(Cli, InsufficientTruncationIsInputError) {
  const std::string b = run_cli({"bg", "Z/2", "--truncate", "2"}).out;
  EXPECT_EQ(run_cli({"homology", "-", "--deg", "2"}, b).code, cli::kInputError);
  EXPECT_EQ(run_cli({"euler", "-"}, b).code, cli::kInputError);
  EXPECT_EQ(run_cli({"kan", "-", "--max-dim", "3"}, b).code, cli::kInputError);
  EXPECT_EQ(run_cli({"pin", "-", "--deg", "2"}, b).code, cli::kInputError);
}

TEST(Cli, ParseErrorsCarryLocation) {
  const Outcome empty = run_cli({"validate"}, "");
  EXPECT_EQ(empty.code, cli::kInputError);
  EXPECT_NE(empty.err.find("1:1"), std::string::npos) << empty.err;
  const Outcome dangling = run_cli({"validate"}, "sset\ntruncation 1\ndim 0 : a\ndim 1 : f\nfaces f = [a, b]\n");
  EXPECT_EQ(dangling.code, cli::kInputError);
  EXPECT_NE(dangling.err.find("dangling reference 'b'"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"kan"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"kan", "/nonexistent.sset"}).code, cli::kInputError);
}

TEST(Cli, ResourceCap) {
  const std::string b = run_cli({"bg", "S3", "--truncate", "3"}).out;
  EXPECT_EQ(run_cli({"kan", "-", "--max-dim", "3", "--cap", "5"}, b).code, cli::kResourceCap);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run_cli({"fill", fx("delta1.sset"), "--faces", "[_, s0 . 0, 01]"}).code, cli::kFailure);
  const Outcome filled = run_cli({"fill", fx("delta2.sset"), "--faces", "[12, _, 01]"});
  EXPECT_EQ(filled.code, cli::kOk);
  EXPECT_NE(filled.out.find("012"), std::string::npos);
  EXPECT_NE(run_cli({"maps", fx("delta1.sset"), fx("delta2.sset")}).out.find("maps: 6"), std::string::npos);
  EXPECT_NE(run_cli({"pi1", fx("circle.sset")}).out.find("abelianization: Z"), std::string::npos);
  EXPECT_NE(run_cli({"export-cw", fx("torus.sset")}).out.find("euler: 0"), std::string::npos);
  EXPECT_EQ(run_cli({"pi0", fx("torus.sset")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"validate", fx("square.cat")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"validate", fx("swapped.homotopy")}).code, cli::kFailure);
  EXPECT_EQ(run_cli({"nerve", fx("square.cat")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"product", fx("delta1.sset"), fx("circle.sset")}).code, cli::kOk);
  const Outcome hc = run_cli({"hcnerve", fx("z2.scat"), "--max-dim", "3"});
  ASSERT_EQ(hc.code, cli::kOk);
  EXPECT_EQ(hc.out, run_cli({"bg", fx("z2.group"), "--truncate", "3"}).out);
  const Outcome pin = run_cli({"pin", "-", "--deg", "1"}, run_cli({"bg", "Z/3", "--truncate", "3"}).out);
  EXPECT_NE(pin.out.find("classes: 3"), std::string::npos);
}

TEST(Cli, JsonWriter) {
  const Outcome r = run_cli({"--format", "json", "homology", fx("torus.sset")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.front(), '[');
  EXPECT_NE(r.out.find("\"group\": \"Z^2\""), std::string::npos);
}

TEST(Cli, ReportsIndependentOfThreads) {
  const std::string b = run_cli({"bg", "S3", "--truncate", "3"}).out;
  for (const auto& args : std::vector<std::vector<std::string>>{{"kan", "-", "--max-dim", "2"},
                                                                 {"--format", "json", "kan", "-", "--max-dim", "2"},
                                                                 {"maps", fx("delta2.sset"), "-", "--list"}}) {
    auto one = args;
    one.insert(one.begin(), {"--threads", "1"});
    auto four = args;
    four.insert(four.begin(), {"--threads", "4"});
    EXPECT_EQ(run_cli(one, b).out, run_cli(four, b).out);
  }
}

}  // namespace
}  // namespace sset
