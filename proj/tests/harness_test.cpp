#include <gtest/gtest.h>

#include "refine/formats.hpp"
#include "refine/harness.hpp"

using namespace refine;

TEST(Generator, SameSeedSameInstance) {
  GenConfig cfg;
  cfg.seed = 99;
  Lts a = gen_lts(cfg), b = gen_lts(cfg);
  EXPECT_EQ(a.transitions(), b.transitions());
  EXPECT_EQ(a.num_states(), b.num_states());
  cfg.seed = 100;
  EXPECT_EQ(serialise_lts(gen_lts(cfg)) == serialise_lts(a), false);
}

TEST(Generator, DensityZeroIsEdgeless) {
  GenConfig cfg;
  cfg.density = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    Lts l = gen_lts(cfg);
    EXPECT_TRUE(l.transitions().empty());
    EXPECT_TRUE(l.deadlocked(l.initial()));
  }
}

TEST(Generator, InvariantSweep) {
  GenConfig cfg;
  cfg.max_states = 6;
  cfg.seed = 3;
  Sampler s(cfg);
  std::size_t divergent = 0;
  for (int i = 0; i < 1000; ++i) {
    Lts l = s.next();
    EXPECT_EQ(l.initial(), 0u);
    EXPECT_GE(l.num_states(), 1u);
    EXPECT_LE(l.num_states(), 6u);
    EXPECT_EQ(l.alphabet(), letter_alphabet(3));
    for (const auto& t : l.transitions()) {
      EXPECT_LT(t.source, l.num_states());
      EXPECT_LT(t.target, l.num_states());
    }
    for (StateId x = 0; x < l.num_states(); ++x) {
      if (l.diverges(x)) {
        ++divergent;
        break;
      }
    }
  }
  EXPECT_GE(divergent, 333u);
}

TEST(Generator, InternalChoiceRefinesBelow) {
  GenConfig cfg;
  cfg.seed = 8;
  Sampler s(cfg);
  for (int i = 0; i < 30; ++i) {
    Lts q = s.next(), r = s.next();
    Lts p = internal_choice(q, r);
    for (auto k : {PreorderKind::safety, PreorderKind::liveness, PreorderKind::cond_liveness, PreorderKind::lt}) {
      EXPECT_TRUE(refines(p, q, k).holds);
    }
  }
}

TEST(Harness, ReproducerBundlesFilesAndCommand) {
  GenConfig cfg;
  std::string text = reproducer({{"P", gen_lts(cfg)}}, "ltsrefine explore P.aut");
  EXPECT_NE(text.find("--- P.aut ---\ndes ("), std::string::npos);
  EXPECT_NE(text.find("$ ltsrefine explore P.aut"), std::string::npos);
}

TEST(Harness, SmallEquationRunIsClean) {
  auto reports = check_compositional_equations(40, 3, 17);
  ASSERT_EQ(reports.size(), 9u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.ok()) << r.format();
    EXPECT_EQ(r.cases, 40u);
  }
}

TEST(Harness, SmallTheoremRunIsClean) {
  for (const auto& r : check_theorem_suite(60, 23)) EXPECT_TRUE(r.ok()) << r.format();
  EXPECT_TRUE(safety_characterisation_suite(60, 5, 23).ok());
  EXPECT_TRUE(canonical_reduction_suite(40, 4, 23).ok());
  EXPECT_TRUE(identity_suite(60, 4, 23).ok());
  EXPECT_TRUE(ambient_alphabet_suite(40, 23).ok());
}

TEST(Harness, ReportFormat) {
  SuiteReport r{"demo"};
  r.cases = 3;
  r.violations.push_back("boom");
  EXPECT_FALSE(r.ok());
  std::string text = r.format();
  EXPECT_NE(text.find("demo: cases=3"), std::string::npos);
  EXPECT_NE(text.find("violations=1"), std::string::npos);
  EXPECT_NE(text.find("boom"), std::string::npos);
}
