#include "refine/properties.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <tuple>

#include "refine/denotation.hpp"
#include "refine/error.hpp"

namespace refine {

namespace {

Dfa trie(const Alphabet& alphabet, const std::set<Word>& words) {
  std::vector<std::vector<AutState>> delta(1, std::vector<AutState>(alphabet.size(), kNoState));
  std::vector<bool> accepting(1, false);
  for (const auto& w : words) {
    AutState s = 0;
    for (ActionId a : w) {
      if (delta[s][a] == kNoState) {
        delta[s][a] = static_cast<AutState>(delta.size());
        delta.emplace_back(alphabet.size(), kNoState);
        accepting.push_back(false);
      }
      s = delta[s][a];
    }
    accepting[s] = true;
  }
  return Dfa(alphabet, 0, std::move(delta), std::move(accepting)).completed();
}

Dfa difference(const Dfa& a0, const Dfa& b0) {
  Dfa a = a0.completed();
  Dfa b = b0.completed();
  std::map<std::pair<AutState, AutState>, AutState> index;
  std::vector<std::pair<AutState, AutState>> states;
  std::vector<std::vector<AutState>> delta;
  std::vector<bool> accepting;
  auto number = [&](AutState x, AutState y) {
    auto [it, inserted] = index.emplace(std::pair{x, y}, static_cast<AutState>(states.size()));
    if (inserted) {
      states.emplace_back(x, y);
      delta.emplace_back(a.alphabet().size(), kNoState);
      accepting.push_back(a.accepting(x) && !b.accepting(y));
    }
    return it->second;
  };
  number(a.initial(), b.initial());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (ActionId c = 0; c < a.alphabet().size(); ++c) {
      AutState t = number(a.next(states[i].first, c), b.next(states[i].second, c));
      delta[i][c] = t;
    }
  }
  return Dfa(a.alphabet(), 0, std::move(delta), std::move(accepting));
}

}  // namespace

WordSet WordSet::finite(Alphabet alphabet, std::set<Word> words) {
  for (const auto& w : words) {
    for (ActionId a : w) {
      if (a >= alphabet.size()) throw SemanticError("word uses an action outside its alphabet");
    }
  }
  WordSet s;
  s.dfa_ = trie(alphabet, words);
  s.alphabet_ = std::move(alphabet);
  s.words_ = std::move(words);
  s.finite_ = true;
  return s;
}

WordSet WordSet::finite(Alphabet alphabet, const std::vector<std::vector<std::string>>& words) {
  std::set<Word> encoded;
  for (const auto& w : words) encoded.insert(alphabet.encode(w));
  return finite(std::move(alphabet), std::move(encoded));
}

WordSet WordSet::regular(Dfa acceptor) {
  WordSet s;
  s.alphabet_ = acceptor.alphabet();
  s.dfa_ = acceptor.completed();
  s.finite_ = false;
  return s;
}

WordSet WordSet::containing(const Alphabet& alphabet, const std::string& label) {
  ActionId x = alphabet.id(label);
  std::vector<std::vector<AutState>> delta(2, std::vector<AutState>(alphabet.size(), 0));
  for (ActionId a = 0; a < alphabet.size(); ++a) delta[1][a] = 1;
  delta[0][x] = 1;
  return regular(Dfa(alphabet, 0, std::move(delta), {false, true}));
}

WordSet WordSet::ending_with(const Alphabet& alphabet, const std::string& label) {
  ActionId x = alphabet.id(label);
  std::vector<std::vector<AutState>> delta(2, std::vector<AutState>(alphabet.size(), 0));
  delta[0][x] = 1;
  delta[1][x] = 1;
  return regular(Dfa(alphabet, 0, std::move(delta), {false, true}));
}

std::size_t WordSet::max_length() const {
  std::size_t n = 0;
  for (const auto& w : words_) n = std::max(n, w.size());
  return n;
}

bool WordSet::contains(const Word& w) const { return dfa_.accepts(w); }

WordSet WordSet::over(const Alphabet& superset) const {
  if (!finite_) return regular(dfa_.over(superset));
  std::set<Word> moved;
  for (const auto& w : words_) moved.insert(translate_word(w, alphabet_, superset));
  return finite(superset, std::move(moved));
}

WordSet WordSet::minus(const WordSet& other) const {
  if (other.alphabet_ != alphabet_) throw SemanticError("word sets over different alphabets");
  if (finite_) {
    std::set<Word> kept;
    for (const auto& w : words_) {
      if (!other.contains(w)) kept.insert(w);
    }
    return finite(alphabet_, std::move(kept));
  }
  return regular(difference(dfa_, other.dfa_));
}

std::string WordSet::describe() const {
  if (!finite_) return "<regular, " + std::to_string(dfa_.size()) + " states>";
  std::string out = "{";
  bool first = true;
  for (const auto& w : words_) {
    out += first ? "" : "; ";
    out += format_word(w, alphabet_);
    first = false;
  }
  return out + "}";
}

PropertySpec PropertySpec::safety(WordSet b) {
  PropertySpec s;
  s.kind = Kind::safety;
  s.bad = std::move(b);
  return s;
}

PropertySpec PropertySpec::liveness(WordSet g) {
  PropertySpec s;
  s.kind = Kind::liveness;
  s.condition = WordSet::finite(g.alphabet(), std::set<Word>{Word{}});
  s.goal = std::move(g);
  return s;
}

PropertySpec PropertySpec::cond_liveness(WordSet c, WordSet g) {
  if (c.alphabet() != g.alphabet()) throw SemanticError("condition and goal sets over different alphabets");
  PropertySpec s;
  s.kind = Kind::cond_liveness;
  s.condition = std::move(c);
  s.goal = std::move(g);
  return s;
}

const Alphabet& PropertySpec::alphabet() const { return kind == Kind::safety ? bad.alphabet() : goal.alphabet(); }

PropertySpec PropertySpec::over(const Alphabet& superset) const {
  PropertySpec s = *this;
  if (kind == Kind::safety) {
    s.bad = bad.over(superset);
  } else {
    s.condition = condition.over(superset);
    s.goal = goal.over(superset);
  }
  return s;
}

std::string_view to_string(PropertySpec::Kind kind) {
  switch (kind) {
    case PropertySpec::Kind::safety: return "safety";
    case PropertySpec::Kind::liveness: return "liveness";
    case PropertySpec::Kind::cond_liveness: return "condliveness";
  }
  return "?";
}

std::string PropertySpec::describe() const {
  switch (kind) {
    case Kind::safety: return "safety " + bad.describe();
    case Kind::liveness: return "liveness " + goal.describe();
    case Kind::cond_liveness: return "condliveness C " + condition.describe() + " G " + goal.describe();
  }
  return {};
}

PropertySpec canonical_safety(const Alphabet& alphabet, const std::string& b) {
  return PropertySpec::safety(WordSet::containing(alphabet, b));
}

PropertySpec canonical_liveness(const Alphabet& alphabet, const std::string& g) {
  return PropertySpec::liveness(WordSet::containing(alphabet, g));
}

PropertySpec canonical_cond_liveness(const Alphabet& alphabet, const std::string& c, const std::string& g) {
  return PropertySpec::cond_liveness(WordSet::containing(alphabet, c), WordSet::containing(alphabet, g));
}

std::string_view to_string(PropertyVerdict::Violation v) {
  switch (v) {
    case PropertyVerdict::Violation::none: return "none";
    case PropertyVerdict::Violation::bad_trace: return "bad-trace";
    case PropertyVerdict::Violation::deadlock: return "deadlock";
    case PropertyVerdict::Violation::divergence: return "divergence";
    case PropertyVerdict::Violation::infinite: return "infinite";
  }
  return "?";
}

std::string PropertyVerdict::describe(const Alphabet& alphabet) const {
  if (holds) return "satisfied";
  std::string out = std::string(to_string(violation)) + " " + format_word(trace, alphabet);
  if (violation == Violation::infinite) out += " (" + format_word(cycle, alphabet) + ")^w";
  return out;
}

namespace {

PropertyVerdict check_safety(const DenotationAutomaton& d, const Dfa& bad) {
  std::map<std::pair<AutState, AutState>, std::size_t> index;
  std::vector<std::tuple<AutState, AutState, std::size_t, ActionId>> nodes;
  nodes.emplace_back(d.initial(), bad.initial(), 0, 0);
  index[{d.initial(), bad.initial()}] = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [x, b, parent, letter] = nodes[i];
    if (bad.accepting(b)) {
      PropertyVerdict v;
      v.holds = false;
      v.violation = PropertyVerdict::Violation::bad_trace;
      for (std::size_t n = i; n != 0; n = std::get<2>(nodes[n])) v.trace.push_back(std::get<3>(nodes[n]));
      v.trace = Word(v.trace.rbegin(), v.trace.rend());
      return v;
    }
    for (ActionId a = 0; a < d.alphabet().size(); ++a) {
      AutState x2 = d.next(x, a);
      if (x2 == kNoState) continue;
      AutState b2 = bad.next(b, a);
      if (index.emplace(std::pair{x2, b2}, nodes.size()).second) nodes.emplace_back(x2, b2, i, a);
    }
  }
  return {};
}

// Product of the unflooded denotation with prefix monitors for C and G.
// c_hit / g_hit record whether some prefix, the current word included, has
// been in C / G.
PropertyVerdict check_liveness(const DenotationAutomaton& d, const Dfa& cond, const Dfa& goal) {
  struct Node {
    AutState x, c, g;
    bool c_hit, g_hit;
    std::size_t parent;
    ActionId letter;
    auto key() const { return std::tuple{x, c, g, c_hit, g_hit}; }
  };
  const std::size_t n = d.alphabet().size();
  std::vector<Node> nodes;
  std::vector<std::vector<std::size_t>> succ;
  std::map<std::tuple<AutState, AutState, AutState, bool, bool>, std::size_t> index;
  auto add = [&](Node node) {
    auto [it, inserted] = index.emplace(node.key(), nodes.size());
    if (inserted) {
      nodes.push_back(node);
      succ.emplace_back(n, static_cast<std::size_t>(-1));
    }
    return it->second;
  };
  add({d.initial(), cond.initial(), goal.initial(), cond.accepting(cond.initial()), goal.accepting(goal.initial()), 0,
       0});
  auto path = [&](std::size_t i) {
    Word w;
    for (; i != 0; i = nodes[i].parent) w.push_back(nodes[i].letter);
    return Word(w.rbegin(), w.rend());
  };

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Node node = nodes[i];
    if (node.g_hit) continue;
    if (node.c_hit) {
      const MacroState& m = d.state(node.x);
      if (m.deadlock || m.divergent) {
        PropertyVerdict v;
        v.holds = false;
        v.violation = m.deadlock ? PropertyVerdict::Violation::deadlock : PropertyVerdict::Violation::divergence;
        v.trace = path(i);
        return v;
      }
    }
    for (ActionId a = 0; a < n; ++a) {
      AutState x2 = d.next(node.x, a);
      if (x2 == kNoState) continue;
      AutState c2 = cond.next(node.c, a);
      AutState g2 = goal.next(node.g, a);
      succ[i][a] = add({x2, c2, g2, node.c_hit || cond.accepting(c2), node.g_hit || goal.accepting(g2), i, a});
    }
  }

  // Infinite complete traces: a cycle through nodes that have met C but
  // not G. Both flags are sticky, so the whole cycle stays in that region.
  auto pending = [&](std::size_t i) { return nodes[i].c_hit && !nodes[i].g_hit; };
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    if (!pending(x)) continue;
    std::vector<std::pair<std::size_t, ActionId>> parent(nodes.size(), {static_cast<std::size_t>(-1), 0});
    std::vector<bool> seen(nodes.size(), false);
    std::deque<std::size_t> queue{x};
    std::optional<std::pair<std::size_t, ActionId>> closing;
    while (!queue.empty() && !closing) {
      std::size_t s = queue.front();
      queue.pop_front();
      for (ActionId a = 0; a < n && !closing; ++a) {
        std::size_t t = succ[s][a];
        if (t == static_cast<std::size_t>(-1) || !pending(t)) continue;
        if (t == x) {
          closing = std::pair{s, a};
        } else if (!seen[t]) {
          seen[t] = true;
          parent[t] = {s, a};
          queue.push_back(t);
        }
      }
    }
    if (!closing) continue;
    Word cycle{closing->second};
    for (std::size_t s = closing->first; s != x; s = parent[s].first) cycle.push_back(parent[s].second);
    PropertyVerdict v;
    v.holds = false;
    v.violation = PropertyVerdict::Violation::infinite;
    v.trace = path(x);
    v.cycle = Word(cycle.rbegin(), cycle.rend());
    return v;
  }
  return {};
}

}  // namespace

PropertyVerdict satisfies(const Lts& p, const PropertySpec& spec) {
  const Alphabet& alphabet = spec.alphabet();
  if (!alphabet.includes(p.alphabet())) throw SemanticError("property alphabet does not cover the process alphabet");
  auto d = denote(p.with_alphabet(alphabet), FloodMode::none);
  if (spec.kind == PropertySpec::Kind::safety) return check_safety(d, spec.bad.acceptor());
  return check_liveness(d, spec.condition.acceptor(), spec.goal.acceptor());
}

bool may_reach(const Lts& p, const std::string& a) {
  auto id = p.alphabet().find(a);
  if (!id) return false;
  std::vector<bool> seen(p.num_states(), false);
  std::deque<StateId> queue{p.initial()};
  seen[p.initial()] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const auto& t : p.outgoing(s)) {
      if (t.action == *id) return true;
      if (!seen[t.target]) {
        seen[t.target] = true;
        queue.push_back(t.target);
      }
    }
  }
  return false;
}

bool spec_matches(PreorderKind kind, const PropertySpec& spec) {
  using K = PropertySpec::Kind;
  switch (kind) {
    case PreorderKind::safety: return spec.kind == K::safety;
    case PreorderKind::liveness: return spec.kind == K::liveness;
    case PreorderKind::cond_liveness: return spec.kind != K::safety;
    case PreorderKind::lt: return true;
  }
  return false;
}

RespectReport respects_check(const std::vector<std::pair<Lts, Lts>>& pairs, PreorderKind kind,
                             const std::vector<PropertySpec>& specs) {
  RespectReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [p, q] = pairs[i];
    ++report.pairs;
    if (!refines(p, q, kind).holds) continue;
    ++report.refining_pairs;
    for (std::size_t j = 0; j < specs.size(); ++j) {
      if (!spec_matches(kind, specs[j])) continue;
      ++report.checks;
      if (!satisfies(p, specs[j]).holds) continue;
      ++report.premises_true;
      auto vq = satisfies(q, specs[j]);
      if (vq.holds) continue;
      std::ostringstream msg;
      msg << "pair " << i << " spec " << j << " (" << specs[j].describe() << "): left satisfies, right violates by "
          << vq.describe(specs[j].alphabet());
      report.violations.push_back(msg.str());
    }
  }
  return report;
}

}  // namespace refine
