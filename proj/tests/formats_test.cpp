#include <gtest/gtest.h>

#include "refine/error.hpp"
#include "refine/formats.hpp"
#include "refine/harness.hpp"
#include "support.hpp"

using namespace refine;
using namespace refine::testing;

namespace {

void expect_parse_error(const std::function<void()>& f, std::size_t line, std::size_t column) {
  try {
    f();
    ADD_FAILURE() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(LtsFormat, RoundTripsFixtures) {
  for (const char* name : {"L1.aut", "R1.aut", "PuhakkaL.aut", "PuhakkaR.aut", "AA.aut"}) {
    Lts l = fixture(name);
    Lts back = parse_lts(serialise_lts(l));
    EXPECT_TRUE(isomorphic(l, back)) << name;
    EXPECT_EQ(back.alphabet(), l.alphabet());
  }
}

TEST(LtsFormat, RoundTripsRandomSamples) {
  GenConfig cfg;
  cfg.seed = 5;
  Sampler s(cfg);
  for (int i = 0; i < 100; ++i) {
    Lts l = s.next();
    EXPECT_TRUE(isomorphic(l, parse_lts(serialise_lts(l)))) << serialise_lts(l);
  }
}

TEST(LtsFormat, AlphabetLineAndQuotedLabels) {
  Lts l = lts("des (0, 1, 2)\nalphabet: a \"b\"\n(0, \"a\", 1)\n");
  EXPECT_EQ(l.alphabet(), Alphabet({"a", "b"}));
  EXPECT_EQ(lts("# comment\ndes (0, 0, 1)\n").num_states(), 1u);
}

TEST(LtsFormat, PositionedErrors) {
  expect_parse_error([] { lts("des (0, 1, 2)\n(0, a, 5)\n"); }, 2, 8);
  expect_parse_error([] { lts("des (0, 1, 2)\n(0 a, 1)\n"); }, 2, 4);
  expect_parse_error([] { lts("des (0, 2, 2)\n(0, a, 1)\n"); }, 3, 1);
  expect_parse_error([] { lts("nonsense"); }, 1, 1);
}

TEST(InterfaceFormat, RoundTripAndErrors) {
  InterfaceSpec m = parse_interface("states: s0 s1\ns0, a -> a1, s1\n*, * -> *, s0\n");
  InterfaceSpec back = parse_interface(serialise_interface(m));
  EXPECT_EQ(back.rules(), m.rules());
  EXPECT_EQ(back.states(), m.states());
  EXPECT_EQ(m.action("s1", "z"), "z");
  EXPECT_EQ(m.effect("s1", "z"), "s0");
  expect_parse_error([] { parse_interface("states: s0\ns0, a -> b\n"); }, 2, 11);
  EXPECT_THROW(parse_interface("states: s0\ns9, a -> b, s0\n"), ParseError);
}

TEST(RenamingFormat, RoundTrip) {
  auto r = parse_renaming("a -> b\n# swap\nb -> a\n");
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(parse_renaming(serialise_renaming(r)), r);
  EXPECT_THROW(parse_renaming("a -> b\na -> c\n"), ParseError);
}

TEST(DfaFormat, WildcardsBindToAmbientAlphabet) {
  RawDfa raw = parse_dfa("des (0, 3, 2)\naccept: 1\n(0, c, 1)\n(0, \"*\", 0)\n(1, \"*\", 1)\n");
  EXPECT_EQ(raw.labels(), std::vector<std::string>{"c"});
  Dfa d = raw.bind(Alphabet({"a", "g"}));
  EXPECT_EQ(d.alphabet(), Alphabet({"a", "c", "g"}));
  EXPECT_TRUE(d.accepts(parse_word("a g c a", d.alphabet())));
  EXPECT_FALSE(d.accepts(parse_word("a g", d.alphabet())));
  EXPECT_THROW(parse_dfa("des (0, 2, 2)\naccept: 1\n(0, c, 1)\n(0, c, 0)\n"), ParseError);
}

TEST(PropertyFormat, Kinds) {
  auto none = [](const std::string&) -> std::string { throw SemanticError("no files"); };
  RawProperty s = parse_property("safety { a b ; c }", "p", none);
  EXPECT_EQ(s.kind, PropertySpec::Kind::safety);
  EXPECT_EQ(s.bad.words.size(), 2u);
  PropertySpec bound = s.bind(Alphabet({"a", "b", "c", "d"}));
  EXPECT_EQ(bound.alphabet().size(), 4u);
  RawProperty c = parse_property("condliveness { C { c } G { c g } }", "p", none);
  EXPECT_EQ(c.kind, PropertySpec::Kind::cond_liveness);
  EXPECT_EQ(c.labels(), (std::vector<std::string>{"c", "g"}));
  EXPECT_THROW(parse_property("liveness { a", "p", none), ParseError);
}

TEST(ExprFormat, PrecedenceAndFormatting) {
  ExprPtr e = parse_expr("hide {a} in A |[a]| B |[b]| C");
  EXPECT_EQ(format_expr(*e), "((hide { a } in A |[ a ]| B) |[ b ]| C)");
  EXPECT_EQ(format_expr(*parse_expr("state M @ s0 in rename R in P")), "state M @ s0 in rename R in P");
  expect_parse_error([] { parse_expr("A |[ a ]| hide { b in B", "e"); }, 1, 24);
  EXPECT_THROW(parse_expr("hide {a} in in"), ParseError);
}

TEST(ExprEval, MapEnvironment) {
  MapEnvironment env;
  env.processes.emplace("A", fixture("AA.aut"));
  env.processes.emplace("L", fixture("L1.aut"));
  env.interfaces["M"] = parse_interface("states: s0 s1\ns0, a -> a1, s1\ns1, a -> a2, s1\n");
  env.renamings["R"] = {{"a", "b"}};
  Lts both = eval_expr(*parse_expr("A |[ ]| L"), env);
  EXPECT_EQ(both.alphabet(), Alphabet({"a", "c", "g"}));
  EXPECT_EQ(eval_expr(*parse_expr("rename R in A"), env).alphabet(), Alphabet({"b"}));
  EXPECT_EQ(eval_expr(*parse_expr("state M @ s0 in A"), env).alphabet(), Alphabet({"a1", "a2"}));
  expect_parse_error([&] { eval_expr(*parse_expr("hide { z } in A"), env); }, 1, 1);
  expect_parse_error([&] { eval_expr(*parse_expr("A |[ a ]| Nope"), env); }, 1, 11);
  EXPECT_THROW(eval_expr(*parse_expr("state M @ s7 in A"), env), ParseError);
}

TEST(ExprEval, FileEnvironment) {
  FileEnvironment env({REFINE_FIXTURE_DIR}, {});
  Lts counted = env.process("Counted");
  BoundedTraces b = enumerate_bounded(counted, 3);
  EXPECT_TRUE(b.deadlocks.count(parse_word("a1 a2", counted.alphabet())));
  EXPECT_THROW(env.process("Missing"), SemanticError);
}
