#include "refine/operators.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "refine/error.hpp"

namespace refine {

InterfaceSpec::InterfaceSpec(std::vector<std::string> states) : states_(std::move(states)) {
  std::sort(states_.begin(), states_.end());
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
  if (states_.empty()) throw SemanticError("an interface needs at least one internal state");
}

bool InterfaceSpec::has_state(std::string_view s) const {
  return std::binary_search(states_.begin(), states_.end(), s);
}

void InterfaceSpec::add_rule(Key key, Outcome outcome) {
  if (key.state && !has_state(*key.state)) throw SemanticError("unknown internal state '" + *key.state + "'");
  if (outcome.next && !has_state(*outcome.next)) throw SemanticError("unknown internal state '" + *outcome.next + "'");
  if (outcome.action && !is_valid_label(*outcome.action)) {
    throw SemanticError("interface emits invalid label '" + *outcome.action + "'");
  }
  auto [it, inserted] = rules_.emplace(key, outcome);
  if (!inserted && !(it->second == outcome)) {
    throw SemanticError("conflicting rules for (" + key.state.value_or("*") + ", " + key.label.value_or("*") + ")");
  }
}

const InterfaceSpec::Outcome* InterfaceSpec::lookup(std::string_view state, std::string_view label) const {
  const Key candidates[] = {
      {std::string(state), std::string(label)},
      {std::string(state), std::nullopt},
      {std::nullopt, std::string(label)},
      {std::nullopt, std::nullopt},
  };
  for (const auto& k : candidates) {
    if (auto it = rules_.find(k); it != rules_.end()) return &it->second;
  }
  return nullptr;
}

std::string InterfaceSpec::action(std::string_view state, std::string_view label) const {
  const Outcome* o = lookup(state, label);
  return o && o->action ? *o->action : std::string(label);
}

std::string InterfaceSpec::effect(std::string_view state, std::string_view label) const {
  const Outcome* o = lookup(state, label);
  return o && o->next ? *o->next : std::string(state);
}

Alphabet InterfaceSpec::output_alphabet(const Alphabet& inputs) const {
  std::vector<std::string> out;
  for (const auto& s : states_) {
    for (const auto& a : inputs.labels()) out.push_back(action(s, a));
  }
  return Alphabet(std::move(out));
}

InterfaceSpec InterfaceSpec::renaming(const std::map<std::string, std::string>& map) {
  InterfaceSpec m({"s"});
  for (const auto& [from, to] : map) m.add_rule({std::nullopt, from}, {to, std::nullopt});
  return m;
}

RenamingMap::RenamingMap(Alphabet domain, std::map<std::string, std::string> map)
    : domain_(std::move(domain)), map_(std::move(map)) {
  for (const auto& [from, to] : map_) {
    if (!is_valid_label(from) || !is_valid_label(to)) {
      throw SemanticError("renaming uses an invalid label in '" + from + " -> " + to + "'");
    }
  }
  std::vector<std::string> image;
  for (const auto& a : domain_.labels()) image.push_back(apply(a));
  codomain_ = Alphabet(image);
  injective_ = codomain_.size() == domain_.size();
}

std::string RenamingMap::apply(std::string_view label) const {
  auto it = map_.find(std::string(label));
  return it == map_.end() ? std::string(label) : it->second;
}

RenamingMap inverse_of(const RenamingMap& r) {
  if (!r.injective()) throw SemanticError("renaming is not injective, so it has no inverse");
  std::map<std::string, std::string> inv;
  for (const auto& a : r.domain().labels()) {
    auto b = r.apply(a);
    if (b != a) inv[b] = a;
  }
  return RenamingMap(r.codomain(), std::move(inv));
}

Lts par(const Lts& p, const ActionSet& sync, const Lts& q) {
  if (p.alphabet() != q.alphabet()) throw SemanticError("parallel composition needs equal alphabets");
  if (sync.universe() != p.alphabet().size()) throw SemanticError("sync set over a different alphabet");

  std::map<std::pair<StateId, StateId>, StateId> index;
  std::deque<std::pair<StateId, StateId>> queue;
  std::vector<Transition> ts;
  auto number = [&](StateId x, StateId y) {
    auto [it, inserted] = index.emplace(std::pair{x, y}, static_cast<StateId>(index.size()));
    if (inserted) queue.emplace_back(x, y);
    return it->second;
  };
  number(p.initial(), q.initial());
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    StateId from = index.at({x, y});
    for (const auto& t : p.outgoing(x)) {
      if (t.silent() || !sync.contains(t.action)) ts.push_back({from, t.action, number(t.target, y)});
    }
    for (const auto& t : q.outgoing(y)) {
      if (t.silent() || !sync.contains(t.action)) ts.push_back({from, t.action, number(x, t.target)});
    }
    for (const auto& t : p.outgoing(x)) {
      if (t.silent() || !sync.contains(t.action)) continue;
      for (const auto& u : q.outgoing(y)) {
        if (u.action == t.action) ts.push_back({from, t.action, number(t.target, u.target)});
      }
    }
  }
  return Lts(p.alphabet(), index.size(), 0, std::move(ts));
}

Lts par(const Lts& p, const std::vector<std::string>& sync, const Lts& q) {
  return par(p, ActionSet::from_labels(p.alphabet(), sync), q);
}

Lts hide(const Lts& p, const ActionSet& hidden) {
  if (hidden.universe() != p.alphabet().size()) throw SemanticError("hide set over a different alphabet");
  std::vector<Transition> ts = p.transitions();
  for (auto& t : ts) {
    if (!t.silent() && hidden.contains(t.action)) t.action = kSilent;
  }
  return Lts(p.alphabet(), p.num_states(), p.initial(), std::move(ts));
}

Lts hide(const Lts& p, const std::vector<std::string>& hidden) {
  return hide(p, ActionSet::from_labels(p.alphabet(), hidden));
}

Lts state_op(const InterfaceSpec& m, const std::string& initial_state, const Lts& p) {
  if (!m.has_state(initial_state)) throw SemanticError("unknown internal state '" + initial_state + "'");
  const Alphabet& in = p.alphabet();
  Alphabet out = m.output_alphabet(in);

  // Resolve the interface once into dense tables.
  const auto& names = m.states();
  auto state_index = [&](const std::string& s) {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<std::vector<ActionId>> act(names.size(), std::vector<ActionId>(in.size()));
  std::vector<std::vector<std::size_t>> eff(names.size(), std::vector<std::size_t>(in.size()));
  for (std::size_t s = 0; s < names.size(); ++s) {
    for (ActionId a = 0; a < in.size(); ++a) {
      act[s][a] = out.id(m.action(names[s], in.label(a)));
      eff[s][a] = state_index(m.effect(names[s], in.label(a)));
    }
  }

  std::map<std::pair<StateId, std::size_t>, StateId> index;
  std::deque<std::pair<StateId, std::size_t>> queue;
  std::vector<Transition> ts;
  auto number = [&](StateId x, std::size_t s) {
    auto [it, inserted] = index.emplace(std::pair{x, s}, static_cast<StateId>(index.size()));
    if (inserted) queue.emplace_back(x, s);
    return it->second;
  };
  number(p.initial(), state_index(initial_state));
  while (!queue.empty()) {
    auto [x, s] = queue.front();
    queue.pop_front();
    StateId from = index.at({x, s});
    for (const auto& t : p.outgoing(x)) {
      if (t.silent()) ts.push_back({from, kSilent, number(t.target, s)});
      else ts.push_back({from, act[s][t.action], number(t.target, eff[s][t.action])});
    }
  }
  return Lts(out, index.size(), 0, std::move(ts));
}

Lts rename(const RenamingMap& r, const Lts& p) {
  if (!r.domain().includes(p.alphabet())) throw SemanticError("renaming domain does not cover the process alphabet");
  Lts lifted = p.with_alphabet(r.domain());
  std::vector<Transition> ts = lifted.transitions();
  for (auto& t : ts) {
    if (!t.silent()) t.action = r.codomain().id(r.apply(r.domain().label(t.action)));
  }
  return Lts(r.codomain(), lifted.num_states(), lifted.initial(), std::move(ts));
}

std::set<Word> word_merge(const Word& nu, const ActionSet& sync, const Word& xi, std::size_t bound) {
  std::set<Word> out;
  Word acc;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (acc.size() > bound) return;
    if (i == nu.size() && j == xi.size()) {
      out.insert(acc);
      return;
    }
    if (i < nu.size() && !sync.contains(nu[i])) {
      acc.push_back(nu[i]);
      go(i + 1, j);
      acc.pop_back();
    }
    if (j < xi.size() && !sync.contains(xi[j])) {
      acc.push_back(xi[j]);
      go(i, j + 1);
      acc.pop_back();
    }
    if (i < nu.size() && j < xi.size() && nu[i] == xi[j] && sync.contains(nu[i])) {
      acc.push_back(nu[i]);
      go(i + 1, j + 1);
      acc.pop_back();
    }
  };
  go(0, 0);
  return out;
}

std::vector<std::pair<Word, Word>> word_splits(const Word& w, const ActionSet& sync) {
  std::vector<std::pair<Word, Word>> out;
  Word left, right;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == w.size()) {
      out.emplace_back(left, right);
      return;
    }
    if (sync.contains(w[i])) {
      left.push_back(w[i]);
      right.push_back(w[i]);
      go(i + 1);
      left.pop_back();
      right.pop_back();
      return;
    }
    left.push_back(w[i]);
    go(i + 1);
    left.pop_back();
    right.push_back(w[i]);
    go(i + 1);
    right.pop_back();
  };
  go(0);
  return out;
}

Word hide_word(const Word& w, const ActionSet& hidden) {
  Word out;
  for (ActionId a : w) {
    if (!hidden.contains(a)) out.push_back(a);
  }
  return out;
}

std::pair<Word, std::string> state_op_word(const InterfaceSpec& m, const std::string& s, const Word& w,
                                           const Alphabet& in, const Alphabet& out) {
  Word result;
  std::string state = s;
  for (ActionId a : w) {
    const std::string& label = in.label(a);
    result.push_back(out.id(m.action(state, label)));
    state = m.effect(state, label);
  }
  return {result, state};
}

}  // namespace refine
