#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refine {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

/// Action id reserved for the silent action. Never an index into an Alphabet.
inline constexpr ActionId kSilent = std::numeric_limits<ActionId>::max();

/// Textual token for the silent action in every file format.
inline constexpr std::string_view kSilentToken = "tau";

/// A finite trace over the visible actions of some Alphabet.
using Word = std::vector<ActionId>;

/// True if `label` is a usable visible label: nonempty, no whitespace or
/// format punctuation, and not the silent token.
bool is_valid_label(std::string_view label);

/// Finite, sorted, duplicate-free set of visible labels. Action ids are
/// positions in the sorted order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ActionId id) const;

  std::optional<ActionId> find(std::string_view label) const;
  /// Like find, but throws SemanticError naming the label.
  ActionId id(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  bool includes(const Alphabet& other) const;
  Alphabet merged(const Alphabet& other) const;

  /// Translates a word of labels; throws SemanticError naming the first
  /// label outside the alphabet.
  Word encode(std::span<const std::string> labels) const;
  std::vector<std::string> decode(const Word& word) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Renders a word as space-separated labels, or "ε" when empty.
std::string format_word(const Word& word, const Alphabet& alphabet);

/// Splits on whitespace and encodes against `alphabet`.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Maps each action of `word` (over `from`) to the same label in `to`.
Word translate_word(const Word& word, const Alphabet& from, const Alphabet& to);

/// Subset of an alphabet's action ids, stored as a bitset.
class ActionSet {
 public:
  ActionSet() = default;
  explicit ActionSet(std::size_t universe);
  ActionSet(std::size_t universe, std::initializer_list<ActionId> members);

  static ActionSet full(std::size_t universe);
  static ActionSet from_labels(const Alphabet& alphabet, std::span<const std::string> labels);

  std::size_t universe() const noexcept { return universe_; }
  void insert(ActionId a);
  void erase(ActionId a);
  bool contains(ActionId a) const;
  bool empty() const noexcept;
  std::size_t count() const noexcept;
  std::vector<ActionId> members() const;

  bool subset_of(const ActionSet& other) const;
  bool intersects(const ActionSet& other) const;
  ActionSet complement() const;
  ActionSet operator|(const ActionSet& other) const;
  ActionSet operator&(const ActionSet& other) const;
  ActionSet operator-(const ActionSet& other) const;

  friend bool operator==(const ActionSet&, const ActionSet&) = default;
  friend std::strong_ordering operator<=>(const ActionSet& a, const ActionSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  void check_same(const ActionSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// "{a,b}" using the alphabet's labels.
std::string format_set(const ActionSet& set, const Alphabet& alphabet);

/// Translates a set over `from` into `to`; labels missing from `to` throw.
ActionSet translate_set(const ActionSet& set, const Alphabet& from, const Alphabet& to);

/// Every subset of a universe of the given size, in increasing bit order.
std::vector<ActionSet> all_subsets(std::size_t universe);

/// Every word over `universe` letters of length <= depth, shortlex ordered.
std::vector<Word> all_words(std::size_t universe, std::size_t depth);

}  // namespace refine
