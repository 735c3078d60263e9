#include <gtest/gtest.h>

#include "refine/error.hpp"
#include "refine/harness.hpp"
#include "refine/preorders.hpp"
#include "support.hpp"

using namespace refine;
using namespace refine::testing;

namespace {

const PreorderKind kAll[] = {PreorderKind::safety, PreorderKind::liveness, PreorderKind::cond_liveness,
                             PreorderKind::lt};

}  // namespace

TEST(Preorders, NamesRoundTrip) {
  for (PreorderKind k : kAll) EXPECT_EQ(parse_preorder_kind(to_string(k)), k);
  EXPECT_EQ(parse_preorder_kind("cond_liveness"), PreorderKind::cond_liveness);
  EXPECT_THROW(parse_preorder_kind("bisim"), SemanticError);
}

TEST(Preorders, Reflexive) {
  GenConfig cfg;
  cfg.seed = 11;
  Sampler s(cfg);
  for (int i = 0; i < 60; ++i) {
    Lts p = s.next();
    for (PreorderKind k : kAll) EXPECT_TRUE(refines(p, p, k).holds) << serialise_lts(p);
  }
}

TEST(Preorders, IdleLoopPair) {
  Lts l1 = fixture("L1.aut"), r1 = fixture("R1.aut");
  EXPECT_TRUE(equivalent(l1, r1, PreorderKind::liveness).holds);
  Verdict v = refines(l1, r1, PreorderKind::cond_liveness);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.component, "failures");
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->describe(l1.alphabet()), "failure <c, {c,g}>");
  EXPECT_FALSE(refines(l1, r1, PreorderKind::lt).holds);
}

TEST(Preorders, Puhakka) {
  Lts pl = fixture("PuhakkaL.aut"), pr = fixture("PuhakkaR.aut");
  Verdict v = refines(pl, pr, PreorderKind::liveness);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->describe(pl.alphabet()), "failure <a, {a}>");
  EXPECT_TRUE(refines(pr, pl, PreorderKind::liveness).holds);
  Verdict both = equivalent(pl, pr, PreorderKind::liveness);
  EXPECT_FALSE(both.holds);
  EXPECT_FALSE(both.converse);
  EXPECT_TRUE(equivalent(pl, pr, PreorderKind::safety).holds);
}

TEST(Preorders, SafetyWitnessIsShortestTrace) {
  Lts small = lts("des (0, 1, 2)\nalphabet: a b\n(0, a, 1)\n");
  Lts big = lts("des (0, 3, 3)\nalphabet: a b\n(0, a, 1)\n(1, b, 2)\n(0, b, 0)\n");
  Verdict v = refines(small, big, PreorderKind::safety);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.component, "traces");
  EXPECT_EQ(v.witness->kind, Witness::Kind::trace);
  EXPECT_EQ(v.witness->trace, parse_word("b", small.alphabet()));
  EXPECT_TRUE(refines(big, small, PreorderKind::safety).holds);
}

TEST(Preorders, DivergenceComesFirst) {
  Lts calm = lts("des (0, 1, 2)\n(0, a, 1)\n");
  Lts busy = lts("des (0, 2, 2)\n(0, a, 1)\n(0, tau, 0)\n");
  Verdict v = refines(calm, busy, PreorderKind::cond_liveness);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.component, "divergences");
  EXPECT_EQ(v.witness->trace, Word{});
}

TEST(Preorders, RequiresEqualAlphabets) {
  EXPECT_THROW(refines(fixture("AA.aut"), fixture("L1.aut"), PreorderKind::safety), SemanticError);
}

TEST(Preorders, DeadlockDivergenceCrossCheck) {
  Lts l1 = fixture("L1.aut"), r1 = fixture("R1.aut");
  EXPECT_EQ(dd_preorder(r1, l1), refines(l1, r1, PreorderKind::cond_liveness).holds);
  auto w = deadlock_divergence_counterexample(l1, r1);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, parse_word("c", l1.alphabet()));
  EXPECT_FALSE(deadlock_divergence_counterexample(r1, r1));
}

TEST(Preorders, VerdictReport) {
  Lts pl = fixture("PuhakkaL.aut"), pr = fixture("PuhakkaR.aut");
  std::string report = format_verdict(refines(pl, pr, PreorderKind::liveness), pl.alphabet());
  for (const char* key : {"preorder: liveness", "verdict: refuted", "direction: left-to-right", "component: failures",
                          "witness-kind: failure", "witness-trace: a", "witness-refusal: {a}", "time-ms:"}) {
    EXPECT_NE(report.find(key), std::string::npos) << key << "\n" << report;
  }
}
