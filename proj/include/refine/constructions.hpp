#pragma once

#include <set>
#include <string>
#include <utility>

#include "refine/lts.hpp"
#include "refine/operators.hpp"
#include "refine/preorders.hpp"
#include "refine/properties.hpp"

namespace refine {

/// `base`, or `base` followed by the smallest number, not in `alphabet`.
std::string fresh_label(const Alphabet& alphabet, const std::string& base);

/// Deterministic process whose complete traces are exactly `words`: the
/// trie of the words, deadlocking at their ends. Throws if the set is empty
/// or one word is a proper prefix of another.
Lts deterministic_tester(const Alphabet& alphabet, const std::set<Word>& words);

/// Cyclic deterministic process for the infinite word u v^ω that offers g
/// (leading to a deadlock) before every letter.
Lts lasso_tester(const Alphabet& alphabet, const Word& u, const Word& v, ActionId g);

struct HistoryOperator {
  InterfaceSpec interface;
  std::string initial;
};

/// Interface remembering the history up to `horizon` letters (then an
/// absorbing overflow state). action(σ, a) = bad if σa ∈ B, neutral
/// otherwise. Afterwards state_op(m, initial, p) ⊨ safety(bad) iff
/// p ⊨ safety(B). B must be finite, its words of length 1..horizon.
HistoryOperator history_state_operator(const WordSet& b, const std::string& bad, const std::string& neutral,
                                       std::size_t horizon);

/// As above with action(σ, a) = c if σa ∈ C∖G, g if σa ∈ G, neutral
/// otherwise, so that state_op(m, initial, p) ⊨ liveness_c(g) iff
/// p ⊨ liveness_C(G). Finite sets must fit the horizon; ε must be in
/// neither set.
HistoryOperator cond_history_state_operator(const WordSet& c, const WordSet& g, const std::string& c_label,
                                            const std::string& g_label, const std::string& neutral,
                                            std::size_t horizon);

/// (τ_I(p) ||_∅ r_σ) ||_Act r_σa with I = Act∖{a}; every trace of the
/// result is a prefix of σa, and σa is one iff p can perform a.
struct SafetyContext {
  Alphabet alphabet;
  ActionSet hidden;
  Lts r_sigma;
  Lts r_sigma_a;
  Word sigma_a;

  Lts apply(const Lts& p) const;
};

SafetyContext safety_reduction_context(const Alphabet& alphabet, const Word& sigma, const std::string& a);

/// A tester context plus the property that the context makes fail for the
/// process owning the witness.
struct DistinguishingTest {
  Alphabet alphabet;  // process alphabet plus the fresh labels
  Lts tester = Lts::deadlock(Alphabet{});
  ActionSet sync;
  PropertySpec property;

  /// p (lifted to `alphabet`) ||_sync tester.
  Lts apply(const Lts& p) const;
};

/// Builds the separating context for a witness returned by
/// refines(p, q, kind): C[p] ⊨ property while C[q] violates it.
///   liveness (flooding ⊥): divergence, failure and infinite witnesses,
///     property liveness(G);
///   cond_liveness and lt (flooding d): divergence and failure witnesses,
///     property liveness_C(G) with C the words containing c.
/// `g` and `c` must be outside `alphabet`. Other shapes throw.
DistinguishingTest liveness_distinguishing_tester(const Witness& w, PreorderKind kind, const Alphabet& alphabet,
                                                  const std::string& g, const std::string& c);

}  // namespace refine
