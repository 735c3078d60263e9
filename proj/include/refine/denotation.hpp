#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "refine/automata.hpp"
#include "refine/lts.hpp"

namespace refine {

/// How behaviour after a divergence is treated.
///   none: raw failures, divergences and infinite traces.
///   bot:  after a divergence everything is possible (universal sink).
///   d:    at a divergence trace every refusal is added; nothing else.
enum class FloodMode { none, bot, d };

std::string_view to_string(FloodMode mode);
FloodMode parse_flood_mode(std::string_view text);

struct Failure {
  Word trace;
  ActionSet refusal;
};

/// One macro state of the subset construction over weak visible steps.
struct MacroState {
  std::vector<StateId> members;   // silent-closed, sorted; empty for the flood sink
  bool divergent = false;         // some member diverges (always true for the sink)
  bool deadlock = false;          // some member has no transition at all
  bool flooded = false;           // the universal sink of mode bot
  /// Maximal refusal sets: complements of the visible initials of stable
  /// members, or the whole alphabet when flooding applies. A set X is
  /// refused iff it is a subset of one of these.
  std::vector<ActionSet> refusals;
};

/// Failures, divergences and infinite traces of a process, encoded as one
/// deterministic automaton with per-state annotations.
class DenotationAutomaton {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  FloodMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return states_.size(); }
  AutState initial() const noexcept { return initial_; }
  const MacroState& state(AutState s) const { return states_.at(s); }
  AutState next(AutState s, ActionId a) const;
  /// Macro state reached by w, or kNoState when w is not a trace.
  AutState run(const Word& w) const;

  bool refuses(AutState s, const ActionSet& x) const;

  /// Human-readable report: members, flags and maximal refusals per state.
  std::string dump() const;

 private:
  friend DenotationAutomaton denote(const Lts& p, FloodMode mode);

  Alphabet alphabet_;
  FloodMode mode_ = FloodMode::none;
  AutState initial_ = 0;
  std::vector<MacroState> states_;
  std::vector<std::vector<AutState>> delta_;
};

DenotationAutomaton denote(const Lts& p, FloodMode mode);

/// ⟨σ, X⟩ in the mode's failure set.
bool query_failure(const DenotationAutomaton& d, const Failure& f);
/// σ in the mode's divergence set.
bool query_divergence(const DenotationAutomaton& d, const Word& w);
/// σ in the partial traces (mode bot: including the flooded extensions).
bool query_trace(const DenotationAutomaton& d, const Word& w);

/// Acceptor for the mode's divergence set.
Dfa divergence_language(const DenotationAutomaton& d);
/// Acceptor for the partial traces (flooded under mode bot).
Dfa trace_language(const DenotationAutomaton& d);
/// Acceptor for the mode's deadlock traces, ⟨σ, Act⟩ ∈ failures.
Dfa deadlock_language(const DenotationAutomaton& d);

/// Deterministic acceptor for the mode's infinite traces. `mode` must equal
/// d.mode().
OmegaAcceptor infinite_language(const DenotationAutomaton& d, FloodMode mode);

}  // namespace refine
