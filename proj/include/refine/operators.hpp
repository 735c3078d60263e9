#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "refine/lts.hpp"

namespace refine {

/// Interface specification of a state operator: internal states, plus the
/// action and effect maps. Rules are kept with wildcards and resolved on
/// lookup, most specific first, so both maps are total over every label:
///   (state, label) > (state, *) > (*, label) > (*, *) > identity/stay.
class InterfaceSpec {
 public:
  struct Outcome {
    std::optional<std::string> action;  // nullopt: keep the input label
    std::optional<std::string> next;    // nullopt: stay in the current state
    friend bool operator==(const Outcome&, const Outcome&) = default;
  };
  /// A rule key; nullopt means the wildcard `*`.
  struct Key {
    std::optional<std::string> state;
    std::optional<std::string> label;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  InterfaceSpec() = default;
  explicit InterfaceSpec(std::vector<std::string> states);

  /// Adds a rule; throws on an unknown state or a conflicting duplicate.
  void add_rule(Key key, Outcome outcome);

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::map<Key, Outcome>& rules() const noexcept { return rules_; }
  bool has_state(std::string_view s) const;

  std::string action(std::string_view state, std::string_view label) const;
  std::string effect(std::string_view state, std::string_view label) const;

  /// Labels emitted by action(s, a) for some state s and some a in `inputs`.
  Alphabet output_alphabet(const Alphabet& inputs) const;

  /// The interface with one internal state that applies `map` (identity
  /// where unmapped).
  static InterfaceSpec renaming(const std::map<std::string, std::string>& map);

 private:
  const Outcome* lookup(std::string_view state, std::string_view label) const;

  std::vector<std::string> states_;
  std::map<Key, Outcome> rules_;
};

/// Total map on visible labels; unmapped labels are fixed.
class RenamingMap {
 public:
  RenamingMap(Alphabet domain, std::map<std::string, std::string> map);

  const Alphabet& domain() const noexcept { return domain_; }
  const std::map<std::string, std::string>& pairs() const noexcept { return map_; }
  /// Image of the domain.
  const Alphabet& codomain() const noexcept { return codomain_; }
  bool injective() const noexcept { return injective_; }
  std::string apply(std::string_view label) const;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::map<std::string, std::string> map_;
  bool injective_ = true;
};

/// Partially synchronous interleaving p ||_S q. Only pairs reachable from
/// the initial pair are built, numbered in BFS order. Alphabets must match.
Lts par(const Lts& p, const ActionSet& sync, const Lts& q);
Lts par(const Lts& p, const std::vector<std::string>& sync, const Lts& q);

/// Abstraction τ_I: every label in `hidden` becomes silent. Alphabet kept.
Lts hide(const Lts& p, const ActionSet& hidden);
Lts hide(const Lts& p, const std::vector<std::string>& hidden);

/// State operator λ^m_{s0}(p). The result alphabet is the set of labels the
/// interface can emit for p's alphabet.
Lts state_op(const InterfaceSpec& m, const std::string& initial_state, const Lts& p);

/// Pointwise relabelling. The result alphabet is r's image.
Lts rename(const RenamingMap& r, const Lts& p);

/// Inverse of an injective renaming, over r's codomain. Throws if r is not
/// injective.
RenamingMap inverse_of(const RenamingMap& r);

/// Every merge of ν and ξ of length <= bound: actions in `sync` occur in
/// both projections, all others in exactly one.
std::set<Word> word_merge(const Word& nu, const ActionSet& sync, const Word& xi, std::size_t bound);

/// Every (ν, ξ) such that w ∈ ν ||_S ξ.
std::vector<std::pair<Word, Word>> word_splits(const Word& w, const ActionSet& sync);

/// τ_I on words.
Word hide_word(const Word& w, const ActionSet& hidden);

/// λ^m_s on words, translating from p's alphabet to `out`. Also returns the
/// internal state reached after w.
std::pair<Word, std::string> state_op_word(const InterfaceSpec& m, const std::string& s, const Word& w,
                                           const Alphabet& in, const Alphabet& out);

}  // namespace refine
