#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "refine/cli.hpp"
#include "support.hpp"

using namespace refine;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ltsrefine");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return (std::filesystem::path(REFINE_FIXTURE_DIR) / name).string(); }

}  // namespace

TEST(Cli, CheckHoldsExitsZero) {
  Outcome r = run({"check", fx("L1.aut"), fx("R1.aut"), "--preorder", "liveness", "--both"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("relation: equivalence"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: holds"), std::string::npos);
}

TEST(Cli, CheckRefutedExitsOneWithWitness) {
  Outcome r = run({"check", fx("L1.aut"), fx("R1.aut"), "--preorder", "cond-liveness", "--witness"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("component: failures"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("witness-trace: c"), std::string::npos);
  EXPECT_NE(r.out.find("witness-refusal: {c,g}"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministicModuloTiming) {
  auto strip = [](const std::string& s) {
    std::istringstream in(s);
    std::string line, kept;
    while (std::getline(in, line)) {
      if (line.rfind("time-ms:", 0) != 0) kept += line + "\n";
    }
    return kept;
  };
  std::vector<std::string> args{"check", fx("PuhakkaL.aut"), fx("PuhakkaR.aut"), "--both", "--witness"};
  EXPECT_EQ(strip(run(args).out), strip(run(args).out));
}

TEST(Cli, PropertyCheck) {
  Outcome ok = run({"prop", fx("L1.aut"), fx("canon-cond-liveness.prop")});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("verdict: satisfied"), std::string::npos);
  Outcome bad = run({"prop", fx("R1.aut"), fx("canon-cond-liveness.prop")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("violation: deadlock"), std::string::npos);
  EXPECT_NE(bad.out.find("witness-trace: c"), std::string::npos);
}

TEST(Cli, ExpressionsAndNames) {
  Outcome r = run({"-d", REFINE_FIXTURE_DIR, "explore", "Counted", "--depth", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ptr: ε | a1 | a1 a2"), std::string::npos) << r.out;
  Outcome e = run({"-d", REFINE_FIXTURE_DIR, "explore", "AA |[ a ]| AA", "--dump", "bot"});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("denotation mode=bot"), std::string::npos);
}

TEST(Cli, ComposeWritesFile) {
  auto out = std::filesystem::temp_directory_path() / "ltsrefine_cli_test.aut";
  Outcome r = run({"--def", "X=" + fx("AA.aut"), "compose", "hide { a } in X", "-o", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream file(out);
  std::stringstream text;
  text << file.rdbuf();
  Lts l = refine::testing::lts(text.str());
  EXPECT_EQ(l.num_states(), 3u);
  std::filesystem::remove(out);
}

TEST(Cli, ErrorsExitTwo) {
  Outcome unknown = run({"-d", REFINE_FIXTURE_DIR, "explore", "Nope"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("error: "), std::string::npos);
  EXPECT_NE(unknown.err.find(":1:1:"), std::string::npos) << unknown.err;
  Outcome syntax = run({"explore", "A |[ a"});
  EXPECT_EQ(syntax.code, 2);
  Outcome usage = run({"check", "only-one"});
  EXPECT_EQ(usage.code, 2);
  Outcome preorder = run({"check", fx("L1.aut"), fx("R1.aut"), "--preorder", "bisim"});
  EXPECT_EQ(preorder.code, 2);
}
