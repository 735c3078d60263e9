#include <gtest/gtest.h>

#include "refine/denotation.hpp"
#include "refine/error.hpp"
#include "refine/operators.hpp"
#include "support.hpp"

using namespace refine;
using namespace refine::testing;

namespace {

const char* kChain = "des (0, 2, 3)\nalphabet: a b\n(0, a, 1)\n(1, b, 2)\n";

}  // namespace

TEST(Par, FullSyncOnIdenticalChainsIsTheChain) {
  Lts chain = lts(kChain);
  Lts both = par(chain, ActionSet::full(2), chain);
  EXPECT_TRUE(isomorphic(both, chain));
}

TEST(Par, EmptySyncInterleaves) {
  Lts a = lts("des (0, 1, 2)\nalphabet: a b\n(0, a, 1)\n");
  Lts b = lts("des (0, 1, 2)\nalphabet: a b\n(0, b, 1)\n");
  BoundedTraces t = enumerate_bounded(par(a, ActionSet(2), b), 3);
  EXPECT_TRUE(t.deadlocks.count(parse_word("a b", a.alphabet())));
  EXPECT_TRUE(t.deadlocks.count(parse_word("b a", a.alphabet())));
  EXPECT_EQ(t.deadlocks.size(), 2u);
}

TEST(Par, SyncBlocksUnmatchedActions) {
  Lts a = lts("des (0, 1, 2)\nalphabet: a b\n(0, a, 1)\n");
  Lts b = lts("des (0, 1, 2)\nalphabet: a b\n(0, b, 1)\n");
  Lts blocked = par(a, std::vector<std::string>{"a", "b"}, b);
  EXPECT_TRUE(blocked.deadlocked(blocked.initial()));
  EXPECT_THROW(par(a, ActionSet(2), fixture("AA.aut")), SemanticError);
}

TEST(Hide, HidingAVisibleLoopCreatesDivergence) {
  Lts loop = lts("des (0, 2, 2)\n(0, a, 0)\n(0, b, 1)\n");
  Lts hidden = hide(loop, std::vector<std::string>{"a"});
  EXPECT_TRUE(hidden.diverges(hidden.initial()));
  EXPECT_TRUE(query_divergence(denote(hidden, FloodMode::none), {}));
  EXPECT_EQ(hidden.alphabet(), loop.alphabet());
}

TEST(StateOp, CounterRenamesFirstAndLaterOccurrences) {
  InterfaceSpec m = parse_interface("states: s0 s1\ns0, a -> a1, s1\ns1, a -> a2, s1\n");
  Lts out = state_op(m, "s0", fixture("AA.aut"));
  EXPECT_EQ(out.alphabet(), Alphabet({"a1", "a2"}));
  BoundedTraces b = enumerate_bounded(out, 3);
  EXPECT_TRUE(b.deadlocks.count(parse_word("a1 a2", out.alphabet())));
  EXPECT_THROW(state_op(m, "s9", fixture("AA.aut")), SemanticError);
}

TEST(StateOp, WildcardPrecedence) {
  InterfaceSpec m({"s", "t"});
  m.add_rule({std::nullopt, std::nullopt}, {"z", std::nullopt});
  m.add_rule({std::nullopt, "a"}, {"y", std::nullopt});
  m.add_rule({"s", std::nullopt}, {"x", "t"});
  m.add_rule({"s", "a"}, {"w", std::nullopt});
  EXPECT_EQ(m.action("s", "a"), "w");
  EXPECT_EQ(m.effect("s", "a"), "s");
  EXPECT_EQ(m.action("s", "b"), "x");
  EXPECT_EQ(m.effect("s", "b"), "t");
  EXPECT_EQ(m.action("t", "a"), "y");
  EXPECT_EQ(m.action("t", "b"), "z");
  EXPECT_THROW(m.add_rule({"s", "a"}, {"v", std::nullopt}), SemanticError);
  EXPECT_THROW(m.add_rule({"u", "a"}, {"v", std::nullopt}), SemanticError);
}

TEST(Rename, InverseRequiresInjectivity) {
  Alphabet ab({"a", "b"});
  RenamingMap swap(ab, {{"a", "b"}, {"b", "a"}});
  EXPECT_TRUE(swap.injective());
  EXPECT_EQ(inverse_of(swap).apply("a"), "b");
  RenamingMap merge(ab, {{"a", "b"}});
  EXPECT_FALSE(merge.injective());
  EXPECT_THROW(inverse_of(merge), SemanticError);
  Lts renamed = rename(merge, lts(kChain));
  EXPECT_EQ(renamed.alphabet(), Alphabet({"b"}));
}

TEST(Words, MergeAndSplitAgree) {
  Alphabet ab({"a", "b"});
  ActionSet sync(2, {0});
  Word nu = parse_word("a b", ab), xi = parse_word("a", ab);
  auto merges = word_merge(nu, sync, xi, 4);
  EXPECT_EQ(merges, (std::set<Word>{parse_word("a b", ab)}));
  for (const auto& w : merges) {
    auto splits = word_splits(w, sync);
    EXPECT_NE(std::find(splits.begin(), splits.end(), std::pair{nu, xi}), splits.end());
  }
  EXPECT_EQ(word_merge(parse_word("b", ab), ActionSet(2), parse_word("b", ab), 4).size(), 1u);
  EXPECT_EQ(hide_word(parse_word("a b a", ab), sync), parse_word("b", ab));
}

TEST(Words, StateOpWordTracksInternalState) {
  InterfaceSpec m = parse_interface("states: s0 s1\ns0, a -> a1, s1\ns1, a -> a2, s1\n");
  Alphabet in({"a"}), out({"a1", "a2"});
  auto [w, s] = state_op_word(m, "s0", parse_word("a a a", in), in, out);
  EXPECT_EQ(w, parse_word("a1 a2 a2", out));
  EXPECT_EQ(s, "s1");
}
