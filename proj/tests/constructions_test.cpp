#include <gtest/gtest.h>

#include "refine/constructions.hpp"
#include "refine/error.hpp"
#include "support.hpp"

using namespace refine;
using namespace refine::testing;

TEST(FreshLabel, AvoidsAlphabet) {
  EXPECT_EQ(fresh_label(Alphabet({"a"}), "g"), "g");
  EXPECT_NE(fresh_label(Alphabet({"g"}), "g"), "g");
  Alphabet taken({"g", fresh_label(Alphabet({"g"}), "g")});
  EXPECT_FALSE(taken.contains(fresh_label(taken, "g")));
}

TEST(Tester, TrieOfCompleteTraces) {
  Alphabet ab({"a", "b"});
  Lts t = deterministic_tester(ab, {parse_word("a b", ab), parse_word("b", ab)});
  EXPECT_TRUE(is_deterministic(t));
  BoundedTraces b = enumerate_bounded(t, 3);
  EXPECT_EQ(b.complete, (std::set<Word>{parse_word("a b", ab), parse_word("b", ab)}));
  EXPECT_THROW(deterministic_tester(ab, {}), SemanticError);
  EXPECT_THROW(deterministic_tester(ab, {parse_word("a", ab), parse_word("a b", ab)}), SemanticError);
}

TEST(Tester, Lasso) {
  Alphabet abg({"a", "b", "g"});
  ActionId g = abg.id("g");
  Lts t = lasso_tester(abg, parse_word("a", abg), parse_word("b", abg), g);
  BoundedTraces b = enumerate_bounded(t, 4);
  EXPECT_TRUE(b.deadlocks.count(parse_word("a b g", abg)));
  EXPECT_TRUE(b.partial.count(parse_word("a b b", abg)));
  EXPECT_FALSE(b.partial.count(parse_word("b", abg)));
  EXPECT_THROW(lasso_tester(abg, {}, {}, g), SemanticError);
}

TEST(History, SafetyReductionWithAB) {
  Alphabet ab({"a", "b"});
  WordSet bad = WordSet::finite(ab, {parse_word("a b", ab)});
  HistoryOperator m = history_state_operator(bad, "bad", "ok", 3);
  EXPECT_EQ(m.initial, "h0");
  Alphabet out({"bad", "ok"});
  PropertySpec canon = canonical_safety(out, "bad");
  Lts ab_chain = lts("des (0, 2, 3)\n(0, a, 1)\n(1, b, 2)\n");
  Lts ba_chain = lts("des (0, 2, 3)\n(0, b, 1)\n(1, a, 2)\n");
  EXPECT_FALSE(satisfies(state_op(m.interface, m.initial, ab_chain), canon).holds);
  EXPECT_TRUE(satisfies(state_op(m.interface, m.initial, ba_chain), canon).holds);
  EXPECT_THROW(history_state_operator(WordSet::finite(ab, {Word{}}), "bad", "ok", 3), SemanticError);
  EXPECT_THROW(history_state_operator(bad, "bad", "ok", 1), SemanticError);
}

TEST(History, CondReduction) {
  Alphabet cg({"c", "g"});
  WordSet c = WordSet::finite(cg, {parse_word("c", cg)});
  WordSet g = WordSet::finite(cg, {parse_word("c g", cg)});
  HistoryOperator m = cond_history_state_operator(c, g, "cond", "goal", "idle", 3);
  Alphabet out({"cond", "goal", "idle"});
  PropertySpec canon = canonical_cond_liveness(out, "cond", "goal");
  Lts r1 = fixture("R1.aut");
  Lts cg_chain = lts("des (0, 2, 3)\n(0, c, 1)\n(1, g, 2)\n");
  EXPECT_FALSE(satisfies(state_op(m.interface, m.initial, lts("des (0, 1, 2)\n(0, c, 1)\n")), canon).holds);
  EXPECT_TRUE(satisfies(state_op(m.interface, m.initial, cg_chain), canon).holds);
  EXPECT_EQ(satisfies(state_op(m.interface, m.initial, r1), canon).holds,
            satisfies(r1, PropertySpec::cond_liveness(c, g)).holds);
}

TEST(SafetyContext, SigmaB) {
  Alphabet ab({"a", "b"});
  SafetyContext ctx = safety_reduction_context(ab, parse_word("b", ab), "a");
  EXPECT_EQ(ctx.sigma_a, parse_word("b a", ab));
  EXPECT_EQ(ctx.hidden, ActionSet(2, {ab.id("b")}));
  Lts can = lts("des (0, 2, 3)\n(0, b, 1)\n(1, a, 2)\n");
  Lts cannot = lts("des (0, 2, 3)\nalphabet: a b\n(0, b, 1)\n(1, b, 2)\n");
  BoundedTraces yes = enumerate_bounded(ctx.apply(can), 3);
  BoundedTraces no = enumerate_bounded(ctx.apply(cannot), 3);
  EXPECT_TRUE(yes.partial.count(ctx.sigma_a));
  EXPECT_FALSE(no.partial.count(ctx.sigma_a));
  for (const auto& w : yes.partial) EXPECT_LE(w.size(), 2u);
}

TEST(Distinguishing, SeparatesIdleLoopPair) {
  Lts l1 = fixture("L1.aut"), r1 = fixture("R1.aut");
  Verdict v = refines(l1, r1, PreorderKind::cond_liveness);
  ASSERT_FALSE(v.holds);
  const Alphabet& a = l1.alphabet();
  std::string g = fresh_label(a, "g"), c = fresh_label(a, "c");
  DistinguishingTest t = liveness_distinguishing_tester(*v.witness, v.kind, a, g, c);
  EXPECT_TRUE(satisfies(t.apply(l1), t.property).holds);
  EXPECT_FALSE(satisfies(t.apply(r1), t.property).holds);
  EXPECT_THROW(liveness_distinguishing_tester(*v.witness, v.kind, a, "g", c), SemanticError);
  EXPECT_THROW(liveness_distinguishing_tester(*v.witness, PreorderKind::safety, a, g, c), SemanticError);
}

TEST(Distinguishing, SeparatesPuhakka) {
  Lts pl = fixture("PuhakkaL.aut"), pr = fixture("PuhakkaR.aut");
  Verdict v = refines(pl, pr, PreorderKind::liveness);
  ASSERT_FALSE(v.holds);
  DistinguishingTest t = liveness_distinguishing_tester(*v.witness, v.kind, pl.alphabet(), "g", "c");
  EXPECT_TRUE(satisfies(t.apply(pl), t.property).holds);
  EXPECT_FALSE(satisfies(t.apply(pr), t.property).holds);
}
