#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "refine/alphabet.hpp"

namespace refine {

struct Transition {
  StateId source = 0;
  ActionId action = kSilent;  // kSilent or an id of the owning Lts's alphabet
  StateId target = 0;

  bool silent() const noexcept { return action == kSilent; }
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A finite labelled transition system over a declared alphabet.
///
/// Immutable after construction. The constructor validates indices and
/// labels, drops duplicate transitions, and precomputes adjacency, silent
/// closures and divergence flags so every query below is read-only.
class Lts {
 public:
  Lts(Alphabet alphabet, std::size_t num_states, StateId initial, std::vector<Transition> transitions);

  /// The one-state LTS with no transitions.
  static Lts deadlock(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  StateId initial() const noexcept { return initial_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

  std::span<const Transition> outgoing(StateId s) const;
  /// States reachable from s by zero or more silent steps, sorted.
  std::span<const StateId> silent_closure(StateId s) const;
  /// True iff an infinite run of silent steps starts in s.
  bool diverges(StateId s) const;
  /// No outgoing silent transition.
  bool stable(StateId s) const;
  /// No outgoing transition at all.
  bool deadlocked(StateId s) const { return outgoing(s).empty(); }
  /// Visible labels of the outgoing transitions of s.
  ActionSet visible_initials(StateId s) const;

  /// Same graph over a larger alphabet. Throws if `superset` misses a label.
  Lts with_alphabet(const Alphabet& superset) const;
  /// Same graph with a different initial state.
  Lts with_initial(StateId initial) const;
  /// Restriction to the states reachable from the initial state,
  /// renumbered in BFS order.
  Lts reachable_part() const;

  std::string label_of(ActionId a) const;

 private:
  void build_indexes();

  Alphabet alphabet_;
  std::size_t num_states_;
  StateId initial_;
  std::vector<Transition> transitions_;            // sorted, unique
  std::vector<std::size_t> offsets_;               // CSR over transitions_
  std::vector<std::vector<StateId>> closures_;
  std::vector<bool> divergent_;
};

/// Weak reachability: { q | from =word=> q }. Sorted.
std::vector<StateId> weak_reach(const Lts& l, StateId from, const Word& word);
std::vector<StateId> weak_reach(const Lts& l, StateId from, std::span<const std::string> labels);

bool diverges(const Lts& l, StateId s);

struct StateClass {
  bool deadlocked = false;
  bool locked = false;
  bool divergent = false;
};

StateClass classify_state(const Lts& l, StateId s);

/// True iff every word leads to at most one state and that state has no
/// silent transition. Decided by subset construction over weak steps.
bool is_deterministic(const Lts& l);

/// Trace-style sets restricted to words of length <= depth. Computed by
/// direct path search over the raw transition graph with its own silent
/// closure and divergence test, so it can serve as an oracle for the
/// automata-based engines.
struct BoundedTraces {
  std::size_t depth = 0;
  std::set<Word> partial;      // ptr
  std::set<Word> deadlocks;
  std::set<Word> divergences;
  std::set<Word> complete;     // deadlocks ∪ divergences (finite complete traces)
  /// Words (length <= depth) that are prefixes of some infinite trace.
  std::set<Word> infinite_prefixes;
  /// For each partial trace: visible initials of every stable state it
  /// reaches. ⟨σ,X⟩ is a failure iff X misses one of these entirely.
  std::map<Word, std::vector<ActionSet>> stable_initials;
  /// States reached by each partial trace.
  std::map<Word, std::set<StateId>> reached;

  bool is_failure(const Word& w, const ActionSet& refusal) const;
};

BoundedTraces enumerate_bounded(const Lts& l, std::size_t depth);

/// Structural isomorphism of the reachable parts (exact labels and alphabet).
bool isomorphic(const Lts& a, const Lts& b);

}  // namespace refine
