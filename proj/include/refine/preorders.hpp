#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "refine/denotation.hpp"
#include "refine/lts.hpp"

namespace refine {

enum class PreorderKind { safety, liveness, cond_liveness, lt };

std::string_view to_string(PreorderKind kind);
/// Accepts "safety", "liveness", "cond-liveness", "cond_liveness", "lt".
PreorderKind parse_preorder_kind(std::string_view text);

/// Finite evidence that an inclusion fails: a behaviour of the right-hand
/// process that the left-hand process lacks.
struct Witness {
  enum class Kind { trace, failure, divergence, infinite_lasso };

  Kind kind = Kind::trace;
  Word trace;         // the trace, the failure trace, or the lasso prefix
  ActionSet refusal;  // failure only
  Word cycle;         // infinite_lasso only; nonempty

  std::string describe(const Alphabet& alphabet) const;
};

std::string_view to_string(Witness::Kind kind);

struct Verdict {
  PreorderKind kind = PreorderKind::safety;
  bool holds = true;
  /// Component that was refuted: "traces", "divergences", "failures" or
  /// "infinite". Empty when the verdict holds.
  std::string component;
  std::optional<Witness> witness;
  /// Set by equivalent() when the witness comes from refines(q, p).
  bool converse = false;
  std::size_t p_states = 0;  // macro states of the two denotations
  std::size_t q_states = 0;
  double millis = 0;
};

/// p ⊑ q: every behaviour of q (in the sense of `kind`) is one of p.
/// Components are checked in the order divergences, failures, infinite
/// traces; the witness is shortest (then least) within the first refuted
/// one. Throws SemanticError if the alphabets differ.
Verdict refines(const Lts& p, const Lts& q, PreorderKind kind);

/// Both directions; the witness comes from the first failing one.
Verdict equivalent(const Lts& p, const Lts& q, PreorderKind kind);

/// p ⊑_d/d q, decided as refines(q, p, cond_liveness).
bool dd_preorder(const Lts& p, const Lts& q);

/// Shortest word of deadlocks(q) ∪ divergences(q) outside
/// deadlocks(p) ∪ divergences(p), if any (unflooded semantics).
std::optional<Word> deadlock_divergence_counterexample(const Lts& p, const Lts& q);

/// Structured `key: value` report of a verdict.
std::string format_verdict(const Verdict& v, const Alphabet& alphabet, bool with_witness = true);

}  // namespace refine
