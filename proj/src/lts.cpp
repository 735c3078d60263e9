#include "refine/lts.hpp"

#include <algorithm>
#include <deque>

#include "refine/error.hpp"

namespace refine {

Lts::Lts(Alphabet alphabet, std::size_t num_states, StateId initial, std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)), num_states_(num_states), initial_(initial), transitions_(std::move(transitions)) {
  if (num_states_ == 0) throw SemanticError("an LTS needs at least one state");
  if (initial_ >= num_states_) throw SemanticError("initial state " + std::to_string(initial_) + " out of range");
  for (const auto& t : transitions_) {
    if (t.source >= num_states_ || t.target >= num_states_) {
      throw SemanticError("transition (" + std::to_string(t.source) + ", " + std::to_string(t.target) +
                          ") references a state out of range");
    }
    if (!t.silent() && t.action >= alphabet_.size()) throw SemanticError("transition label outside alphabet");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  build_indexes();
}

Lts Lts::deadlock(Alphabet alphabet) { return Lts(std::move(alphabet), 1, 0, {}); }

void Lts::build_indexes() {
  offsets_.assign(num_states_ + 1, 0);
  for (const auto& t : transitions_) ++offsets_[t.source + 1];
  for (std::size_t s = 0; s < num_states_; ++s) offsets_[s + 1] += offsets_[s];

  closures_.assign(num_states_, {});
  for (StateId s = 0; s < num_states_; ++s) {
    std::vector<bool> seen(num_states_, false);
    std::vector<StateId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      StateId x = stack.back();
      stack.pop_back();
      closures_[s].push_back(x);
      for (const auto& t : outgoing(x)) {
        if (t.silent() && !seen[t.target]) {
          seen[t.target] = true;
          stack.push_back(t.target);
        }
      }
    }
    std::sort(closures_[s].begin(), closures_[s].end());
  }

  // A state lies on a silent cycle iff it is silently reachable from one of
  // its own silent successors.
  std::vector<bool> on_cycle(num_states_, false);
  for (StateId s = 0; s < num_states_; ++s) {
    for (const auto& t : outgoing(s)) {
      if (t.silent() && std::binary_search(closures_[t.target].begin(), closures_[t.target].end(), s)) {
        on_cycle[s] = true;
        break;
      }
    }
  }
  divergent_.assign(num_states_, false);
  for (StateId s = 0; s < num_states_; ++s) {
    divergent_[s] = std::any_of(closures_[s].begin(), closures_[s].end(), [&](StateId x) { return on_cycle[x]; });
  }
}

std::span<const Transition> Lts::outgoing(StateId s) const {
  if (s >= num_states_) throw SemanticError("state " + std::to_string(s) + " out of range");
  return {transitions_.data() + offsets_[s], transitions_.data() + offsets_[s + 1]};
}

std::span<const StateId> Lts::silent_closure(StateId s) const {
  if (s >= num_states_) throw SemanticError("state " + std::to_string(s) + " out of range");
  return closures_[s];
}

bool Lts::diverges(StateId s) const {
  if (s >= num_states_) throw SemanticError("state " + std::to_string(s) + " out of range");
  return divergent_[s];
}

bool Lts::stable(StateId s) const {
  auto out = outgoing(s);
  return std::none_of(out.begin(), out.end(), [](const Transition& t) { return t.silent(); });
}

ActionSet Lts::visible_initials(StateId s) const {
  ActionSet set(alphabet_.size());
  for (const auto& t : outgoing(s)) {
    if (!t.silent()) set.insert(t.action);
  }
  return set;
}

Lts Lts::with_alphabet(const Alphabet& superset) const {
  if (superset == alphabet_) return *this;
  if (!superset.includes(alphabet_)) throw SemanticError("target alphabet does not include the LTS alphabet");
  std::vector<ActionId> remap(alphabet_.size());
  for (ActionId a = 0; a < alphabet_.size(); ++a) remap[a] = superset.id(alphabet_.label(a));
  std::vector<Transition> ts = transitions_;
  for (auto& t : ts) {
    if (!t.silent()) t.action = remap[t.action];
  }
  return Lts(superset, num_states_, initial_, std::move(ts));
}

Lts Lts::with_initial(StateId initial) const { return Lts(alphabet_, num_states_, initial, transitions_); }

Lts Lts::reachable_part() const {
  std::vector<StateId> number(num_states_, kSilent);
  std::vector<StateId> order;
  std::deque<StateId> queue{initial_};
  number[initial_] = 0;
  order.push_back(initial_);
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const auto& t : outgoing(s)) {
      if (number[t.target] == kSilent) {
        number[t.target] = static_cast<StateId>(order.size());
        order.push_back(t.target);
        queue.push_back(t.target);
      }
    }
  }
  std::vector<Transition> ts;
  for (const auto& t : transitions_) {
    if (number[t.source] != kSilent) ts.push_back({number[t.source], t.action, number[t.target]});
  }
  return Lts(alphabet_, order.size(), 0, std::move(ts));
}

std::string Lts::label_of(ActionId a) const {
  return a == kSilent ? std::string(kSilentToken) : alphabet_.label(a);
}

std::vector<StateId> weak_reach(const Lts& l, StateId from, const Word& word) {
  if (from >= l.num_states()) throw SemanticError("state " + std::to_string(from) + " out of range");
  for (ActionId a : word) {
    if (a >= l.alphabet().size()) throw SemanticError("word contains an action outside the alphabet");
  }
  auto closed = l.silent_closure(from);
  std::vector<StateId> current(closed.begin(), closed.end());
  for (ActionId a : word) {
    std::vector<bool> mark(l.num_states(), false);
    for (StateId s : current) {
      for (const auto& t : l.outgoing(s)) {
        if (t.action != a) continue;
        for (StateId x : l.silent_closure(t.target)) mark[x] = true;
      }
    }
    current.clear();
    for (StateId s = 0; s < l.num_states(); ++s) {
      if (mark[s]) current.push_back(s);
    }
    if (current.empty()) break;
  }
  return current;
}

std::vector<StateId> weak_reach(const Lts& l, StateId from, std::span<const std::string> labels) {
  return weak_reach(l, from, l.alphabet().encode(labels));
}

bool diverges(const Lts& l, StateId s) { return l.diverges(s); }

StateClass classify_state(const Lts& l, StateId s) {
  StateClass c;
  c.deadlocked = l.deadlocked(s);
  c.divergent = l.diverges(s);
  c.locked = true;
  for (StateId x : l.silent_closure(s)) {
    for (const auto& t : l.outgoing(x)) {
      if (!t.silent()) c.locked = false;
    }
  }
  return c;
}

bool is_deterministic(const Lts& l) {
  // Subset construction over weak visible steps; stop at the first macro
  // state that is not a single stable state.
  std::map<std::vector<StateId>, bool> seen;
  std::deque<std::vector<StateId>> queue;
  auto start = l.silent_closure(l.initial());
  queue.emplace_back(start.begin(), start.end());
  seen[queue.front()] = true;
  while (!queue.empty()) {
    auto macro = std::move(queue.front());
    queue.pop_front();
    if (macro.size() != 1 || !l.stable(macro.front())) return false;
    for (ActionId a = 0; a < l.alphabet().size(); ++a) {
      auto next = weak_reach(l, macro.front(), Word{a});
      if (next.empty()) continue;
      if (seen.emplace(next, true).second) queue.push_back(std::move(next));
    }
  }
  return true;
}

namespace {

// Oracle helpers: deliberately separate from the cached closures above.

std::set<StateId> explicit_silent_closure(const Lts& l, const std::set<StateId>& from) {
  std::set<StateId> out = from;
  std::vector<StateId> stack(from.begin(), from.end());
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const auto& t : l.transitions()) {
      if (t.source == s && t.silent() && out.insert(t.target).second) stack.push_back(t.target);
    }
  }
  return out;
}

// Pigeonhole: a silent path longer than the number of states must repeat a
// state, so a state diverges iff such a path starts there.
std::vector<bool> pigeonhole_divergence(const Lts& l) {
  std::size_t n = l.num_states();
  std::vector<bool> has_path(n, true);  // silent path of length 0
  for (std::size_t len = 1; len <= n + 1; ++len) {
    std::vector<bool> next(n, false);
    for (const auto& t : l.transitions()) {
      if (t.silent() && has_path[t.target]) next[t.source] = true;
    }
    has_path = std::move(next);
  }
  return has_path;
}

// States that can reach a cycle containing at least one visible transition.
std::vector<bool> reaches_visible_cycle(const Lts& l) {
  std::size_t n = l.num_states();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) reach[s][s] = true;
  for (const auto& t : l.transitions()) reach[t.source][t.target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<bool> on_visible_cycle(n, false);
  for (const auto& t : l.transitions()) {
    if (!t.silent() && reach[t.target][t.source]) on_visible_cycle[t.source] = true;
  }
  std::vector<bool> out(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      if (reach[s][x] && on_visible_cycle[x]) out[s] = true;
    }
  }
  return out;
}

}  // namespace

bool BoundedTraces::is_failure(const Word& w, const ActionSet& refusal) const {
  auto it = stable_initials.find(w);
  if (it == stable_initials.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const ActionSet& init) { return !init.intersects(refusal); });
}

BoundedTraces enumerate_bounded(const Lts& l, std::size_t depth) {
  BoundedTraces out;
  out.depth = depth;
  auto divergent = pigeonhole_divergence(l);
  auto infinite_ok = reaches_visible_cycle(l);

  std::vector<std::pair<Word, std::set<StateId>>> frontier;
  frontier.emplace_back(Word{}, explicit_silent_closure(l, {l.initial()}));
  while (!frontier.empty()) {
    std::vector<std::pair<Word, std::set<StateId>>> next;
    for (auto& [word, states] : frontier) {
      out.partial.insert(word);
      auto& inits = out.stable_initials[word];
      for (StateId s : states) {
        bool stable = true;
        ActionSet initials(l.alphabet().size());
        for (const auto& t : l.transitions()) {
          if (t.source != s) continue;
          if (t.silent()) stable = false;
          else initials.insert(t.action);
        }
        if (stable) inits.push_back(initials);
        bool any_out = std::any_of(l.transitions().begin(), l.transitions().end(),
                                   [s](const Transition& t) { return t.source == s; });
        if (!any_out) out.deadlocks.insert(word);
        if (divergent[s]) out.divergences.insert(word);
        if (infinite_ok[s]) out.infinite_prefixes.insert(word);
      }
      std::sort(inits.begin(), inits.end());
      inits.erase(std::unique(inits.begin(), inits.end()), inits.end());
      out.reached[word] = states;
      if (word.size() == depth) continue;
      for (ActionId a = 0; a < l.alphabet().size(); ++a) {
        std::set<StateId> succ;
        for (const auto& t : l.transitions()) {
          if (t.action == a && states.count(t.source)) succ.insert(t.target);
        }
        if (succ.empty()) continue;
        Word w = word;
        w.push_back(a);
        next.emplace_back(std::move(w), explicit_silent_closure(l, succ));
      }
    }
    frontier = std::move(next);
  }
  out.complete = out.deadlocks;
  out.complete.insert(out.divergences.begin(), out.divergences.end());
  return out;
}

namespace {

struct IsoSearch {
  const Lts& a;
  const Lts& b;
  std::vector<StateId> fwd, bwd;

  bool signature_match(StateId x, StateId y) const {
    auto ox = a.outgoing(x), oy = b.outgoing(y);
    if (ox.size() != oy.size()) return false;
    std::vector<ActionId> la, lb;
    for (const auto& t : ox) la.push_back(t.action);
    for (const auto& t : oy) lb.push_back(t.action);
    return la == lb;  // outgoing lists are sorted by action
  }

  bool consistent(StateId x, StateId y) {
    // Every transition between mapped states must be present on both sides.
    auto ox = a.outgoing(x);
    auto oy = b.outgoing(y);
    for (const auto& t : ox) {
      if (fwd[t.target] == kSilent) continue;
      Transition u{y, t.action, fwd[t.target]};
      if (!std::binary_search(oy.begin(), oy.end(), u)) return false;
    }
    for (const auto& t : oy) {
      if (bwd[t.target] == kSilent) continue;
      Transition u{x, t.action, bwd[t.target]};
      if (!std::binary_search(ox.begin(), ox.end(), u)) return false;
    }
    return true;
  }

  bool extend(std::vector<StateId>& pending) {
    if (pending.empty()) return true;
    StateId x = pending.back();
    for (StateId y = 0; y < b.num_states(); ++y) {
      if (bwd[y] != kSilent || !signature_match(x, y)) continue;
      fwd[x] = y;
      bwd[y] = x;
      if (consistent(x, y)) {
        // Also verify edges into x from mapped states.
        bool ok = true;
        for (const auto& t : a.transitions()) {
          if (t.target == x && fwd[t.source] != kSilent) {
            auto oy = b.outgoing(fwd[t.source]);
            if (!std::binary_search(oy.begin(), oy.end(), Transition{fwd[t.source], t.action, y})) ok = false;
          }
        }
        if (ok) {
          pending.pop_back();
          if (extend(pending)) return true;
          pending.push_back(x);
        }
      }
      fwd[x] = kSilent;
      bwd[y] = kSilent;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Lts& a0, const Lts& b0) {
  if (a0.alphabet() != b0.alphabet()) return false;
  Lts a = a0.reachable_part();
  Lts b = b0.reachable_part();
  if (a.num_states() != b.num_states() || a.transitions().size() != b.transitions().size()) return false;
  IsoSearch search{a, b, std::vector<StateId>(a.num_states(), kSilent), std::vector<StateId>(b.num_states(), kSilent)};
  if (!search.signature_match(0, 0)) return false;
  search.fwd[0] = 0;
  search.bwd[0] = 0;
  if (!search.consistent(0, 0)) return false;
  std::vector<StateId> pending;
  for (StateId s = a.num_states(); s-- > 1;) pending.push_back(s);
  // back() is state 1: BFS numbering maps states near the initial one first.
  return search.extend(pending);
}

}  // namespace refine
