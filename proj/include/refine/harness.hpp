#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "refine/lts.hpp"
#include "refine/operators.hpp"
#include "refine/preorders.hpp"
#include "refine/properties.hpp"

namespace refine {

struct GenConfig {
  std::size_t max_states = 6;
  std::size_t alphabet_size = 3;
  /// Probability of an edge between an ordered pair of states.
  double density = 0.3;
  /// Probability that an edge is silent.
  double silent_prob = 0.2;
  std::uint64_t seed = 1;
};

/// Labels "a", "b", "c", ... of the first `n` letters.
Alphabet letter_alphabet(std::size_t n);

/// Reproducible random LTS over letter_alphabet(cfg.alphabet_size) with
/// 1..max_states states and initial state 0.
Lts gen_lts(const GenConfig& cfg);

/// Stream of random instances with per-sample seeds derived from a base
/// seed. Every `divergent_every`-th sample gets a forced silent cycle.
class Sampler {
 public:
  explicit Sampler(GenConfig base, std::size_t divergent_every = 3);

  Lts next();
  /// As next(), over the first `alphabet_size` letters.
  Lts next(std::size_t alphabet_size);
  /// Random subset of the alphabet.
  ActionSet subset(std::size_t universe);
  /// Random word of length lo..hi over `universe` letters.
  Word word(std::size_t universe, std::size_t lo, std::size_t hi);
  /// Random interface with up to three internal states over the alphabet,
  /// emitting labels from `outputs`.
  InterfaceSpec interface(const Alphabet& inputs, const std::vector<std::string>& outputs);
  std::mt19937_64& rng() noexcept { return rng_; }
  const GenConfig& config() const noexcept { return base_; }

 private:
  GenConfig base_;
  std::size_t divergent_every_;
  std::size_t count_ = 0;
  std::mt19937_64 rng_;
};

/// p = internal choice between q and r, so that p refines-below q in all
/// four preorders.
Lts internal_choice(const Lts& q, const Lts& r);

/// Text bundle (files plus a command line) reproducing a failing case.
std::string reproducer(const std::vector<std::pair<std::string, Lts>>& processes, const std::string& command);

struct SuiteReport {
  SuiteReport() = default;
  SuiteReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t decided = 0;     // cases where the oracle could decide
  std::size_t interesting = 0; // suite-specific count of non-vacuous cases
  std::vector<std::string> violations;
  double seconds = 0;

  bool ok() const noexcept { return violations.empty(); }
  std::string format() const;
};

/// For each operator (par, hide, state_op) and flood mode (none, bot, d):
/// membership in the engine's denotation of the composite agrees with the
/// right-hand side of the compositional equations evaluated on bounded
/// enumerations of the arguments, for all words up to `depth`, all
/// refusals, and lassos u v^ω with |u| <= 2, 1 <= |v| <= 2.
std::vector<SuiteReport> check_compositional_equations(std::size_t samples, std::size_t depth, std::uint64_t seed);

/// refines(p, q, safety) against bounded reverse ptr inclusion.
SuiteReport safety_characterisation_suite(std::size_t samples, std::size_t depth, std::uint64_t seed);

/// A pair with its refinement verdicts in the three liveness-style
/// preorders; used by the chain and gadget suites.
struct SampledPair {
  Lts p;
  Lts q;
  Verdict lt, cond, live;
};

std::vector<SampledPair> sample_pairs(std::size_t samples, std::uint64_t seed);

/// lt ⇒ cond_liveness ⇒ liveness.
SuiteReport preorder_chain_suite(const std::vector<SampledPair>& pairs);

/// Every witness replays against the bounded oracle (or lasso membership).
SuiteReport witness_soundness_suite(const std::vector<SampledPair>& pairs);

/// Every refuted refinement with a divergence or failure witness is
/// separated by the constructed tester and property.
SuiteReport gadget_separation_suite(const std::vector<SampledPair>& pairs);

/// refines(p, q, cond_liveness) ⇒ bounded deadlocks ∪ divergences of q
/// included in those of p; also dd_preorder(q, p) agrees with it.
SuiteReport dd_suite(const std::vector<SampledPair>& pairs, std::size_t depth);

/// Refining pairs (internal choices and sampled ones) against random
/// finite specs of the matching class.
SuiteReport respects_suite(PreorderKind kind, std::size_t pairs, std::size_t specs_per_pair, std::uint64_t seed);

/// History state operator reductions for safety and conditional liveness.
SuiteReport canonical_reduction_suite(std::size_t samples, std::size_t horizon, std::uint64_t seed);

/// deadlocks = {σ | ⟨σ, Act⟩ ∈ failures} and
/// ptr = divergences ∪ {σ | ⟨σ, ∅⟩ ∈ failures}, oracle and engine.
SuiteReport identity_suite(std::size_t samples, std::size_t depth, std::uint64_t seed);

/// Verdicts stay the same when both processes are lifted to a larger
/// ambient alphabet with labels they never use.
SuiteReport ambient_alphabet_suite(std::size_t samples, std::uint64_t seed);

/// Chain, witness soundness, gadget separation, the d/d cross-check,
/// respect suites and the reference fixtures.
std::vector<SuiteReport> check_theorem_suite(std::size_t samples, std::uint64_t seed);

}  // namespace refine
