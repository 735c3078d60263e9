#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "refine/automata.hpp"
#include "refine/lts.hpp"
#include "refine/preorders.hpp"

namespace refine {

/// A set of finite words: either listed explicitly or given by a
/// deterministic acceptor.
class WordSet {
 public:
  WordSet() = default;

  static WordSet finite(Alphabet alphabet, std::set<Word> words);
  static WordSet finite(Alphabet alphabet, const std::vector<std::vector<std::string>>& words);
  static WordSet regular(Dfa acceptor);
  /// Every word containing `label` at least once.
  static WordSet containing(const Alphabet& alphabet, const std::string& label);
  /// Every word whose last letter is `label`.
  static WordSet ending_with(const Alphabet& alphabet, const std::string& label);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  bool is_finite() const noexcept { return finite_; }
  /// The listed words; only meaningful when is_finite().
  const std::set<Word>& words() const noexcept { return words_; }
  std::size_t max_length() const;

  bool contains(const Word& w) const;
  /// Complete deterministic acceptor (a trie for finite sets).
  const Dfa& acceptor() const noexcept { return dfa_; }

  /// Finite sets are re-encoded; regular sets use Dfa::over, so words with
  /// the new labels are rejected.
  WordSet over(const Alphabet& superset) const;
  WordSet minus(const WordSet& other) const;

  std::string describe() const;

 private:
  Alphabet alphabet_;
  bool finite_ = true;
  std::set<Word> words_;
  Dfa dfa_;
};

struct PropertySpec {
  enum class Kind { safety, liveness, cond_liveness };

  Kind kind = Kind::safety;
  WordSet bad;        // safety
  WordSet condition;  // cond_liveness; {ε} for plain liveness
  WordSet goal;       // liveness, cond_liveness

  static PropertySpec safety(WordSet b);
  static PropertySpec liveness(WordSet g);
  static PropertySpec cond_liveness(WordSet c, WordSet g);

  const Alphabet& alphabet() const;
  PropertySpec over(const Alphabet& superset) const;
  std::string describe() const;
};

std::string_view to_string(PropertySpec::Kind kind);

/// safety(b): no trace contains b.
PropertySpec canonical_safety(const Alphabet& alphabet, const std::string& b);
/// liveness(g): every complete trace contains g.
PropertySpec canonical_liveness(const Alphabet& alphabet, const std::string& g);
/// liveness_c(g): every complete trace containing c also contains g.
PropertySpec canonical_cond_liveness(const Alphabet& alphabet, const std::string& c, const std::string& g);

struct PropertyVerdict {
  enum class Violation { none, bad_trace, deadlock, divergence, infinite };

  bool holds = true;
  Violation violation = Violation::none;
  Word trace;  // the violating finite word, or the lasso prefix
  Word cycle;  // infinite only

  std::string describe(const Alphabet& alphabet) const;
};

std::string_view to_string(PropertyVerdict::Violation v);

/// p ⊨ spec. The spec alphabet must include p's; p is lifted to it (which
/// does not change any trace).
PropertyVerdict satisfies(const Lts& p, const PropertySpec& spec);

/// Some reachable transition is labelled a.
bool may_reach(const Lts& p, const std::string& a);

struct RespectReport {
  std::size_t pairs = 0;
  std::size_t refining_pairs = 0;
  std::size_t checks = 0;
  std::size_t premises_true = 0;  // checks where p ⊨ φ held
  std::vector<std::string> violations;
};

/// Specs belonging to the property class of a preorder: safety → safety;
/// liveness → liveness; cond_liveness → liveness and conditional liveness;
/// lt → all.
bool spec_matches(PreorderKind kind, const PropertySpec& spec);

/// For every (p, q) with refines(p, q, kind) and every matching spec φ:
/// p ⊨ φ implies q ⊨ φ. Any counterexample is reported.
RespectReport respects_check(const std::vector<std::pair<Lts, Lts>>& pairs, PreorderKind kind,
                             const std::vector<PropertySpec>& specs);

}  // namespace refine
