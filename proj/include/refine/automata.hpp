#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refine/alphabet.hpp"

namespace refine {

using AutState = std::uint32_t;
inline constexpr AutState kNoState = std::numeric_limits<AutState>::max();

/// Deterministic word acceptor. Missing edges (kNoState) reject.
class Dfa {
 public:
  Dfa() = default;
  Dfa(Alphabet alphabet, AutState initial, std::vector<std::vector<AutState>> delta, std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return accepting_.size(); }
  AutState initial() const noexcept { return initial_; }
  AutState next(AutState s, ActionId a) const;
  bool accepting(AutState s) const { return s != kNoState && accepting_.at(s); }

  /// State after reading w, or kNoState.
  AutState run(const Word& w) const;
  bool accepts(const Word& w) const { return accepting(run(w)); }

  /// Adds a rejecting sink so that every edge is defined.
  Dfa completed() const;
  Dfa complemented() const;
  /// Same language over a larger alphabet; edges on the new labels reject.
  Dfa over(const Alphabet& superset) const;

  /// Shortest accepted word, if any.
  std::optional<Word> shortest_accepted() const;

 private:
  Alphabet alphabet_;
  AutState initial_ = 0;
  std::vector<std::vector<AutState>> delta_;
  std::vector<bool> accepting_;
};

/// Deterministic Büchi acceptor over infinite words. A word is accepted
/// when its (unique) run is infinite and visits accepting states
/// infinitely often.
class OmegaAcceptor {
 public:
  OmegaAcceptor() = default;
  OmegaAcceptor(Alphabet alphabet, AutState initial, std::vector<std::vector<AutState>> delta,
                std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return accepting_.size(); }
  AutState initial() const noexcept { return initial_; }
  AutState next(AutState s, ActionId a) const;
  bool accepting(AutState s) const { return s != kNoState && accepting_.at(s); }

  /// Membership of the ultimately periodic word u v^ω. `v` must be nonempty.
  bool accepts_lasso(const Word& u, const Word& v) const;
  /// Some accepted lasso, if the language is nonempty.
  std::optional<std::pair<Word, Word>> some_lasso() const;

 private:
  Alphabet alphabet_;
  AutState initial_ = 0;
  std::vector<std::vector<AutState>> delta_;
  std::vector<bool> accepting_;
};

}  // namespace refine
