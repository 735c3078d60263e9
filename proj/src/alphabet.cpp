#include "refine/alphabet.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "refine/error.hpp"

namespace refine {

bool is_valid_label(std::string_view label) {
  if (label.empty() || label == kSilentToken) return false;
  if (label.find("->") != std::string_view::npos) return false;
  for (char c : label) {
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || std::iscntrl(u)) return false;
    switch (c) {
      case '"': case '(': case ')': case '{': case '}': case '[': case ']':
      case ',': case '|': case '@': case '*': case '#': case ';': case ':':
        return false;
      default:
        break;
    }
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (const auto& l : labels_) {
    if (!is_valid_label(l)) throw SemanticError("invalid action label '" + l + "'");
  }
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

const std::string& Alphabet::label(ActionId id) const {
  if (id >= labels_.size()) throw SemanticError("action id " + std::to_string(id) + " outside alphabet");
  return labels_[id];
}

std::optional<ActionId> Alphabet::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<ActionId>(it - labels_.begin());
}

ActionId Alphabet::id(std::string_view label) const {
  if (auto found = find(label)) return *found;
  throw SemanticError("label '" + std::string(label) + "' is not in the alphabet");
}

bool Alphabet::includes(const Alphabet& other) const {
  return std::includes(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end());
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  std::vector<std::string> all = labels_;
  all.insert(all.end(), other.labels_.begin(), other.labels_.end());
  return Alphabet(std::move(all));
}

Word Alphabet::encode(std::span<const std::string> labels) const {
  Word w;
  w.reserve(labels.size());
  for (const auto& l : labels) w.push_back(id(l));
  return w;
}

std::vector<std::string> Alphabet::decode(const Word& word) const {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (ActionId a : word) out.push_back(label(a));
  return out;
}

std::string format_word(const Word& word, const Alphabet& alphabet) {
  if (word.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.label(word[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> labels;
  for (std::string tok; in >> tok;) labels.push_back(tok);
  return alphabet.encode(labels);
}

Word translate_word(const Word& word, const Alphabet& from, const Alphabet& to) {
  if (from == to) return word;
  Word out;
  out.reserve(word.size());
  for (ActionId a : word) out.push_back(to.id(from.label(a)));
  return out;
}

ActionSet::ActionSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

ActionSet::ActionSet(std::size_t universe, std::initializer_list<ActionId> members) : ActionSet(universe) {
  for (ActionId a : members) insert(a);
}

ActionSet ActionSet::full(std::size_t universe) {
  ActionSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<ActionId>(i));
  return s;
}

ActionSet ActionSet::from_labels(const Alphabet& alphabet, std::span<const std::string> labels) {
  ActionSet s(alphabet.size());
  for (const auto& l : labels) s.insert(alphabet.id(l));
  return s;
}

void ActionSet::insert(ActionId a) {
  if (a >= universe_) throw SemanticError("action id outside set universe");
  bits_[a / 64] |= std::uint64_t{1} << (a % 64);
}

void ActionSet::erase(ActionId a) {
  if (a >= universe_) return;
  bits_[a / 64] &= ~(std::uint64_t{1} << (a % 64));
}

bool ActionSet::contains(ActionId a) const {
  return a < universe_ && ((bits_[a / 64] >> (a % 64)) & 1U);
}

bool ActionSet::empty() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ActionSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<ActionId> ActionSet::members() const {
  std::vector<ActionId> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (contains(static_cast<ActionId>(i))) out.push_back(static_cast<ActionId>(i));
  }
  return out;
}

void ActionSet::check_same(const ActionSet& other) const {
  if (universe_ != other.universe_) throw SemanticError("action sets over different alphabets");
}

bool ActionSet::subset_of(const ActionSet& other) const {
  check_same(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

bool ActionSet::intersects(const ActionSet& other) const {
  check_same(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & other.bits_[i]) return true;
  }
  return false;
}

ActionSet ActionSet::complement() const {
  ActionSet out = full(universe_);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= ~bits_[i];
  return out;
}

ActionSet ActionSet::operator|(const ActionSet& other) const {
  check_same(other);
  ActionSet out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
  return out;
}

ActionSet ActionSet::operator&(const ActionSet& other) const {
  check_same(other);
  ActionSet out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= other.bits_[i];
  return out;
}

ActionSet ActionSet::operator-(const ActionSet& other) const {
  check_same(other);
  ActionSet out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= ~other.bits_[i];
  return out;
}

std::string format_set(const ActionSet& set, const Alphabet& alphabet) {
  std::string out = "{";
  bool first = true;
  for (ActionId a : set.members()) {
    if (!first) out += ',';
    first = false;
    out += alphabet.label(a);
  }
  return out + "}";
}

ActionSet translate_set(const ActionSet& set, const Alphabet& from, const Alphabet& to) {
  ActionSet out(to.size());
  for (ActionId a : set.members()) out.insert(to.id(from.label(a)));
  return out;
}

std::vector<ActionSet> all_subsets(std::size_t universe) {
  if (universe > 20) throw SemanticError("refusing to enumerate subsets of a large alphabet");
  std::vector<ActionSet> out;
  out.reserve(std::size_t{1} << universe);
  for (std::size_t mask = 0; mask < (std::size_t{1} << universe); ++mask) {
    ActionSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      if (mask & (std::size_t{1} << i)) s.insert(static_cast<ActionId>(i));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Word> all_words(std::size_t universe, std::size_t depth) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= depth; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t a = 0; a < universe; ++a) {
        Word w = out[i];
        w.push_back(static_cast<ActionId>(a));
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace refine
