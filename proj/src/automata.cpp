#include "refine/automata.hpp"

#include <deque>
#include <map>

#include "refine/error.hpp"

namespace refine {

namespace {

void validate(const Alphabet& alphabet, AutState initial, const std::vector<std::vector<AutState>>& delta,
              const std::vector<bool>& accepting) {
  if (delta.size() != accepting.size()) throw SemanticError("automaton tables disagree on the number of states");
  if (delta.empty() || initial >= delta.size()) throw SemanticError("automaton initial state out of range");
  for (const auto& row : delta) {
    if (row.size() != alphabet.size()) throw SemanticError("automaton row does not match the alphabet");
    for (AutState t : row) {
      if (t != kNoState && t >= delta.size()) throw SemanticError("automaton edge target out of range");
    }
  }
}

// BFS parents for shortest paths.
std::vector<std::pair<AutState, ActionId>> bfs_tree(AutState from, const std::vector<std::vector<AutState>>& delta) {
  std::vector<std::pair<AutState, ActionId>> parent(delta.size(), {kNoState, 0});
  std::vector<bool> seen(delta.size(), false);
  std::deque<AutState> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    AutState s = queue.front();
    queue.pop_front();
    for (ActionId a = 0; a < delta[s].size(); ++a) {
      AutState t = delta[s][a];
      if (t == kNoState || seen[t]) continue;
      seen[t] = true;
      parent[t] = {s, a};
      queue.push_back(t);
    }
  }
  parent[from] = {from, 0};
  return parent;
}

Word path_to(AutState from, AutState to, const std::vector<std::pair<AutState, ActionId>>& parent) {
  Word w;
  for (AutState s = to; s != from; s = parent[s].first) w.push_back(parent[s].second);
  return Word(w.rbegin(), w.rend());
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, AutState initial, std::vector<std::vector<AutState>> delta, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), initial_(initial), delta_(std::move(delta)), accepting_(std::move(accepting)) {
  validate(alphabet_, initial_, delta_, accepting_);
}

AutState Dfa::next(AutState s, ActionId a) const {
  if (s == kNoState) return kNoState;
  return delta_.at(s).at(a);
}

AutState Dfa::run(const Word& w) const {
  AutState s = initial_;
  for (ActionId a : w) {
    s = next(s, a);
    if (s == kNoState) break;
  }
  return s;
}

Dfa Dfa::completed() const {
  auto delta = delta_;
  auto acc = accepting_;
  AutState sink = static_cast<AutState>(delta.size());
  bool needed = false;
  for (auto& row : delta) {
    for (auto& t : row) {
      if (t == kNoState) {
        t = sink;
        needed = true;
      }
    }
  }
  if (!needed) return *this;
  delta.emplace_back(alphabet_.size(), sink);
  acc.push_back(false);
  return Dfa(alphabet_, initial_, std::move(delta), std::move(acc));
}

Dfa Dfa::complemented() const {
  Dfa c = completed();
  for (std::size_t i = 0; i < c.accepting_.size(); ++i) c.accepting_[i] = !c.accepting_[i];
  return c;
}

Dfa Dfa::over(const Alphabet& superset) const {
  if (!superset.includes(alphabet_)) throw SemanticError("word acceptor alphabet is not a subset of the target");
  std::vector<std::vector<AutState>> delta(delta_.size(), std::vector<AutState>(superset.size(), kNoState));
  for (std::size_t s = 0; s < delta_.size(); ++s) {
    for (ActionId a = 0; a < alphabet_.size(); ++a) delta[s][superset.id(alphabet_.label(a))] = delta_[s][a];
  }
  return Dfa(superset, initial_, std::move(delta), accepting_);
}

std::optional<Word> Dfa::shortest_accepted() const {
  auto parent = bfs_tree(initial_, delta_);
  std::optional<Word> best;
  for (AutState s = 0; s < delta_.size(); ++s) {
    if (!accepting_[s] || parent[s].first == kNoState) continue;
    Word w = path_to(initial_, s, parent);
    if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = std::move(w);
  }
  return best;
}

OmegaAcceptor::OmegaAcceptor(Alphabet alphabet, AutState initial, std::vector<std::vector<AutState>> delta,
                             std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), initial_(initial), delta_(std::move(delta)), accepting_(std::move(accepting)) {
  validate(alphabet_, initial_, delta_, accepting_);
}

AutState OmegaAcceptor::next(AutState s, ActionId a) const {
  if (s == kNoState) return kNoState;
  return delta_.at(s).at(a);
}

bool OmegaAcceptor::accepts_lasso(const Word& u, const Word& v) const {
  if (v.empty()) throw SemanticError("lasso cycle must be nonempty");
  AutState s = initial_;
  for (ActionId a : u) {
    s = next(s, a);
    if (s == kNoState) return false;
  }
  // Iterate v until the state at the start of v repeats; the run from the
  // first occurrence onwards is the periodic part.
  std::map<AutState, std::size_t> first_seen;
  std::vector<bool> round_accepts;
  while (!first_seen.count(s)) {
    first_seen[s] = round_accepts.size();
    bool acc = false;
    for (ActionId a : v) {
      s = next(s, a);
      if (s == kNoState) return false;
      acc = acc || accepting(s);
    }
    round_accepts.push_back(acc);
  }
  for (std::size_t i = first_seen[s]; i < round_accepts.size(); ++i) {
    if (round_accepts[i]) return true;
  }
  return false;
}

std::optional<std::pair<Word, Word>> OmegaAcceptor::some_lasso() const {
  auto from_init = bfs_tree(initial_, delta_);
  for (AutState s = 0; s < delta_.size(); ++s) {
    if (!accepting_[s] || from_init[s].first == kNoState) continue;
    // Shortest nonempty cycle through s.
    for (ActionId a = 0; a < alphabet_.size(); ++a) {
      AutState t = delta_[s][a];
      if (t == kNoState) continue;
      auto from_t = bfs_tree(t, delta_);
      if (from_t[s].first == kNoState) continue;
      Word cycle{a};
      Word rest = path_to(t, s, from_t);
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      return std::pair{path_to(initial_, s, from_init), cycle};
    }
  }
  return std::nullopt;
}

}  // namespace refine
