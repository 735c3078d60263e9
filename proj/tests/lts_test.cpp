#include <gtest/gtest.h>

#include "refine/error.hpp"
#include "refine/lts.hpp"
#include "support.hpp"

using namespace refine;
using namespace refine::testing;

TEST(Alphabet, SortsAndDeduplicates) {
  Alphabet a({"g", "c", "g"});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.label(0), "c");
  EXPECT_EQ(a.id("g"), 1u);
  EXPECT_THROW(a.id("x"), SemanticError);
  EXPECT_EQ(format_word({}, a), "ε");
  EXPECT_EQ(format_word(parse_word("c g c", a), a), "c g c");
}

TEST(Alphabet, RejectsReservedLabels) {
  EXPECT_FALSE(is_valid_label("tau"));
  EXPECT_FALSE(is_valid_label(""));
  EXPECT_FALSE(is_valid_label("a b"));
  EXPECT_FALSE(is_valid_label("a->b"));
  EXPECT_TRUE(is_valid_label("send_1"));
  EXPECT_THROW(Alphabet({"tau"}), SemanticError);
}

TEST(ActionSet, Algebra) {
  ActionSet x(3, {0, 2}), y(3, {2});
  EXPECT_TRUE(y.subset_of(x));
  EXPECT_EQ((x - y), ActionSet(3, {0}));
  EXPECT_EQ(x.complement(), ActionSet(3, {1}));
  EXPECT_EQ(all_subsets(3).size(), 8u);
  EXPECT_EQ(all_words(2, 2).size(), 7u);
  EXPECT_THROW((void)(x | ActionSet(2)), SemanticError);
}

TEST(Lts, ValidatesConstruction) {
  Alphabet a({"a"});
  EXPECT_THROW(Lts(a, 1, 0, {{0, 0, 1}}), SemanticError);
  EXPECT_THROW(Lts(a, 1, 1, {}), SemanticError);
  EXPECT_THROW(Lts(a, 1, 0, {{0, 5, 0}}), SemanticError);
  Lts l(a, 2, 0, {{0, 0, 1}, {0, 0, 1}});
  EXPECT_EQ(l.transitions().size(), 1u);
}

TEST(Lts, WeakReachOnIdleLoop) {
  Lts l1 = fixture("L1.aut");
  EXPECT_EQ(weak_reach(l1, 0, word(l1, "c")), std::vector<StateId>{1});
  EXPECT_EQ(weak_reach(l1, 0, word(l1, "")), std::vector<StateId>{0});
  EXPECT_TRUE(weak_reach(l1, 0, word(l1, "g")).empty());
  EXPECT_TRUE(l1.diverges(0));
  EXPECT_FALSE(l1.diverges(1));
  EXPECT_TRUE(l1.deadlocked(2));
  EXPECT_EQ(l1.visible_initials(0), set_of(l1.alphabet(), {"c"}));
}

TEST(Lts, SilentClosureAndClassification) {
  Lts l = lts("des (0, 3, 3)\n(0, tau, 1)\n(1, tau, 2)\n(2, a, 0)\n");
  auto closure = l.silent_closure(0);
  EXPECT_EQ(std::vector<StateId>(closure.begin(), closure.end()), (std::vector<StateId>{0, 1, 2}));
  StateClass c = classify_state(l, 0);
  EXPECT_FALSE(c.divergent);
  EXPECT_FALSE(c.deadlocked);
  EXPECT_TRUE(l.stable(2));
  EXPECT_FALSE(l.stable(0));
}

TEST(Lts, Determinism) {
  EXPECT_TRUE(is_deterministic(fixture("AA.aut")));
  EXPECT_FALSE(is_deterministic(fixture("PuhakkaR.aut")));
  EXPECT_FALSE(is_deterministic(fixture("L1.aut")));
}

TEST(Lts, ReachablePartAndIsomorphism) {
  Lts l = lts("des (1, 2, 3)\n(1, a, 2)\n(0, a, 1)\n");
  Lts r = l.reachable_part();
  EXPECT_EQ(r.num_states(), 2u);
  EXPECT_EQ(r.initial(), 0u);
  EXPECT_TRUE(isomorphic(l, r));
  EXPECT_FALSE(isomorphic(r, fixture("AA.aut")));
}

TEST(Lts, WithAlphabetOnlyWidens) {
  Lts aa = fixture("AA.aut");
  Lts wide = aa.with_alphabet(Alphabet({"a", "b"}));
  EXPECT_EQ(wide.alphabet().size(), 2u);
  EXPECT_THROW(aa.with_alphabet(Alphabet({"b"})), SemanticError);
}

TEST(BoundedTraces, PuhakkaRightProcess) {
  Lts pr = fixture("PuhakkaR.aut");
  BoundedTraces b = enumerate_bounded(pr, 4);
  const Alphabet& a = pr.alphabet();
  EXPECT_EQ(b.partial, (std::set<Word>{{}, parse_word("a", a), parse_word("a a", a)}));
  EXPECT_EQ(b.divergences, (std::set<Word>{parse_word("a a", a)}));
  EXPECT_EQ(b.deadlocks, (std::set<Word>{parse_word("a", a)}));
  EXPECT_TRUE(b.is_failure(parse_word("a", a), ActionSet::full(1)));
  EXPECT_FALSE(enumerate_bounded(fixture("PuhakkaL.aut"), 4).is_failure(parse_word("a", a), ActionSet::full(1)));
}

TEST(BoundedTraces, InfinitePrefixes) {
  Lts loop = lts("des (0, 1, 1)\n(0, a, 0)\n");
  BoundedTraces b = enumerate_bounded(loop, 3);
  EXPECT_EQ(b.infinite_prefixes.size(), 4u);
  EXPECT_TRUE(b.complete.empty());
}
