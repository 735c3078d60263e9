#include <gtest/gtest.h>

#include "refine/error.hpp"
#include "refine/harness.hpp"
#include "refine/properties.hpp"
#include "support.hpp"

using namespace refine;
using namespace refine::testing;

TEST(WordSet, FiniteAndRegular) {
  Alphabet ab({"a", "b"});
  WordSet f = WordSet::finite(ab, std::vector<std::vector<std::string>>{{"a", "b"}, {"b"}});
  EXPECT_TRUE(f.is_finite());
  EXPECT_EQ(f.max_length(), 2u);
  EXPECT_TRUE(f.contains(parse_word("a b", ab)));
  EXPECT_FALSE(f.contains(parse_word("a", ab)));
  EXPECT_TRUE(f.acceptor().accepts(parse_word("b", ab)));

  WordSet has_b = WordSet::containing(ab, "b");
  EXPECT_FALSE(has_b.is_finite());
  EXPECT_TRUE(has_b.contains(parse_word("a a b a", ab)));
  EXPECT_FALSE(has_b.contains(parse_word("a a", ab)));
  EXPECT_TRUE(WordSet::ending_with(ab, "a").contains(parse_word("b a", ab)));

  WordSet diff = has_b.minus(f);
  EXPECT_FALSE(diff.contains(parse_word("b", ab)));
  EXPECT_TRUE(diff.contains(parse_word("b b", ab)));

  WordSet wide = f.over(Alphabet({"a", "b", "c"}));
  EXPECT_TRUE(wide.contains(parse_word("a b", wide.alphabet())));
}

TEST(Satisfies, SafetyOnAA) {
  Lts aa = fixture("AA.aut");
  const Alphabet& a = aa.alphabet();
  PropertyVerdict v = satisfies(aa, PropertySpec::safety(WordSet::finite(a, {parse_word("a a", a)})));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.violation, PropertyVerdict::Violation::bad_trace);
  EXPECT_EQ(v.trace, parse_word("a a", a));
  EXPECT_TRUE(satisfies(aa, PropertySpec::safety(WordSet::finite(a, {parse_word("a a a", a)}))).holds);
}

TEST(Satisfies, CanonicalLivenessOnIdleLoop) {
  Lts l1 = fixture("L1.aut"), r1 = fixture("R1.aut");
  const Alphabet& a = l1.alphabet();
  PropertySpec live = canonical_liveness(a, "g");
  PropertyVerdict v = satisfies(l1, live);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.violation, PropertyVerdict::Violation::divergence);
  EXPECT_EQ(v.trace, Word{});

  PropertySpec cond = canonical_cond_liveness(a, "c", "g");
  EXPECT_TRUE(satisfies(l1, cond).holds);
  PropertyVerdict rv = satisfies(r1, cond);
  EXPECT_FALSE(rv.holds);
  EXPECT_EQ(rv.violation, PropertyVerdict::Violation::deadlock);
  EXPECT_EQ(rv.trace, parse_word("c", a));
}

TEST(Satisfies, InfiniteViolation) {
  Lts loop = lts("des (0, 2, 2)\nalphabet: a g\n(0, a, 0)\n(0, g, 1)\n");
  PropertyVerdict v = satisfies(loop, canonical_liveness(loop.alphabet(), "g"));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.violation, PropertyVerdict::Violation::infinite);
  EXPECT_EQ(v.cycle, parse_word("a", loop.alphabet()));
}

TEST(Satisfies, SpecMustCoverProcessAlphabet) {
  Lts l1 = fixture("L1.aut");
  EXPECT_THROW(satisfies(l1, canonical_liveness(Alphabet({"g"}), "g")), SemanticError);
  Alphabet wide({"c", "g", "z"});
  EXPECT_TRUE(satisfies(l1, canonical_cond_liveness(wide, "c", "g")).holds);
}

TEST(Satisfies, MayReach) {
  EXPECT_TRUE(may_reach(fixture("L1.aut"), "g"));
  EXPECT_FALSE(may_reach(fixture("R1.aut"), "g"));
}

TEST(Respects, SpecClasses) {
  Alphabet a({"a"});
  WordSet w = WordSet::finite(a, {Word{0}});
  PropertySpec s = PropertySpec::safety(w), l = PropertySpec::liveness(w), c = PropertySpec::cond_liveness(w, w);
  EXPECT_TRUE(spec_matches(PreorderKind::safety, s));
  EXPECT_FALSE(spec_matches(PreorderKind::safety, l));
  EXPECT_TRUE(spec_matches(PreorderKind::liveness, l));
  EXPECT_FALSE(spec_matches(PreorderKind::liveness, c));
  EXPECT_TRUE(spec_matches(PreorderKind::cond_liveness, l));
  EXPECT_TRUE(spec_matches(PreorderKind::cond_liveness, c));
  EXPECT_FALSE(spec_matches(PreorderKind::cond_liveness, s));
  EXPECT_TRUE(spec_matches(PreorderKind::lt, s));
}

TEST(Respects, InternalChoicePreservesProperties) {
  Lts q = fixture("AA.aut");
  Lts p = internal_choice(q, lts("des (0, 1, 2)\n(0, a, 1)\n"));
  const Alphabet& a = q.alphabet();
  std::vector<PropertySpec> specs{PropertySpec::safety(WordSet::finite(a, {parse_word("a a a", a)})),
                                  PropertySpec::liveness(WordSet::finite(a, {parse_word("a", a)}))};
  RespectReport r = respects_check({{p, q}}, PreorderKind::lt, specs);
  EXPECT_EQ(r.refining_pairs, 1u);
  EXPECT_EQ(r.checks, 2u);
  EXPECT_EQ(r.premises_true, 2u);
  EXPECT_TRUE(r.violations.empty());
}
