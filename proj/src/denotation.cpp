#include "refine/denotation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "refine/error.hpp"

namespace refine {

std::string_view to_string(FloodMode mode) {
  switch (mode) {
    case FloodMode::none: return "none";
    case FloodMode::bot: return "bot";
    case FloodMode::d: return "d";
  }
  return "?";
}

FloodMode parse_flood_mode(std::string_view text) {
  if (text == "none") return FloodMode::none;
  if (text == "bot") return FloodMode::bot;
  if (text == "d") return FloodMode::d;
  throw SemanticError("unknown flood mode '" + std::string(text) + "'");
}

namespace {

std::vector<ActionSet> maximal_sets(std::vector<ActionSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ActionSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      dominated = i != j && sets[i].subset_of(sets[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

DenotationAutomaton denote(const Lts& p, FloodMode mode) {
  DenotationAutomaton d;
  d.alphabet_ = p.alphabet();
  d.mode_ = mode;
  const std::size_t n = p.alphabet().size();

  std::map<std::vector<StateId>, AutState> index;
  std::deque<AutState> queue;
  AutState sink = kNoState;

  auto make = [&](std::vector<StateId> members) -> AutState {
    bool divergent = std::any_of(members.begin(), members.end(), [&](StateId s) { return p.diverges(s); });
    if (mode == FloodMode::bot && divergent) {
      if (sink == kNoState) {
        sink = static_cast<AutState>(d.states_.size());
        MacroState m;
        m.divergent = true;
        m.flooded = true;
        m.refusals = {ActionSet::full(n)};
        d.states_.push_back(std::move(m));
        d.delta_.emplace_back(n, sink);
      }
      return sink;
    }
    auto [it, inserted] = index.emplace(members, static_cast<AutState>(d.states_.size()));
    if (!inserted) return it->second;
    MacroState m;
    m.divergent = divergent;
    std::vector<ActionSet> gens;
    for (StateId s : members) {
      if (p.deadlocked(s)) m.deadlock = true;
      if (p.stable(s)) gens.push_back(p.visible_initials(s).complement());
    }
    if (mode == FloodMode::d && divergent) gens.push_back(ActionSet::full(n));
    m.refusals = maximal_sets(std::move(gens));
    m.members = std::move(members);
    d.states_.push_back(std::move(m));
    d.delta_.emplace_back(n, kNoState);
    queue.push_back(it->second);
    return it->second;
  };

  auto start = p.silent_closure(p.initial());
  d.initial_ = make(std::vector<StateId>(start.begin(), start.end()));
  while (!queue.empty()) {
    AutState s = queue.front();
    queue.pop_front();
    for (ActionId a = 0; a < n; ++a) {
      std::vector<bool> mark(p.num_states(), false);
      bool any = false;
      for (StateId x : d.states_[s].members) {
        for (const auto& t : p.outgoing(x)) {
          if (t.action != a) continue;
          for (StateId y : p.silent_closure(t.target)) mark[y] = any = true;
        }
      }
      if (!any) continue;
      std::vector<StateId> succ;
      for (StateId y = 0; y < p.num_states(); ++y) {
        if (mark[y]) succ.push_back(y);
      }
      AutState target = make(std::move(succ));
      d.delta_[s][a] = target;
    }
  }
  return d;
}

AutState DenotationAutomaton::next(AutState s, ActionId a) const {
  if (s == kNoState) return kNoState;
  return delta_.at(s).at(a);
}

AutState DenotationAutomaton::run(const Word& w) const {
  AutState s = initial_;
  for (ActionId a : w) {
    s = next(s, a);
    if (s == kNoState) break;
  }
  return s;
}

bool DenotationAutomaton::refuses(AutState s, const ActionSet& x) const {
  if (s == kNoState) return false;
  const auto& gens = states_.at(s).refusals;
  return std::any_of(gens.begin(), gens.end(), [&](const ActionSet& g) { return x.subset_of(g); });
}

std::string DenotationAutomaton::dump() const {
  std::ostringstream out;
  out << "denotation mode=" << to_string(mode_) << " states=" << states_.size() << " initial=" << initial_ << '\n';
  for (AutState s = 0; s < states_.size(); ++s) {
    const auto& m = states_[s];
    out << "state " << s << " members={";
    for (std::size_t i = 0; i < m.members.size(); ++i) out << (i ? "," : "") << m.members[i];
    out << "} divergent=" << m.divergent << " deadlock=" << m.deadlock << " flooded=" << m.flooded << '\n';
    out << "  refusals:";
    for (const auto& r : m.refusals) out << ' ' << format_set(r, alphabet_);
    out << '\n';
    for (ActionId a = 0; a < alphabet_.size(); ++a) {
      if (delta_[s][a] != kNoState) out << "  " << alphabet_.label(a) << " -> " << delta_[s][a] << '\n';
    }
  }
  return out.str();
}

bool query_failure(const DenotationAutomaton& d, const Failure& f) {
  if (f.refusal.universe() != d.alphabet().size()) throw SemanticError("refusal set over a different alphabet");
  return d.refuses(d.run(f.trace), f.refusal);
}

bool query_divergence(const DenotationAutomaton& d, const Word& w) {
  AutState s = d.run(w);
  return s != kNoState && d.state(s).divergent;
}

bool query_trace(const DenotationAutomaton& d, const Word& w) { return d.run(w) != kNoState; }

namespace {

template <typename Pred>
Dfa annotate(const DenotationAutomaton& d, Pred accept) {
  std::vector<std::vector<AutState>> delta(d.size(), std::vector<AutState>(d.alphabet().size()));
  std::vector<bool> acc(d.size());
  for (AutState s = 0; s < d.size(); ++s) {
    for (ActionId a = 0; a < d.alphabet().size(); ++a) delta[s][a] = d.next(s, a);
    acc[s] = accept(s);
  }
  return Dfa(d.alphabet(), d.initial(), std::move(delta), std::move(acc));
}

}  // namespace

Dfa divergence_language(const DenotationAutomaton& d) {
  return annotate(d, [&](AutState s) { return d.state(s).divergent; });
}

Dfa trace_language(const DenotationAutomaton& d) {
  return annotate(d, [](AutState) { return true; });
}

Dfa deadlock_language(const DenotationAutomaton& d) {
  ActionSet all = ActionSet::full(d.alphabet().size());
  return annotate(d, [&](AutState s) { return d.refuses(s, all); });
}

OmegaAcceptor infinite_language(const DenotationAutomaton& d, FloodMode mode) {
  if (mode != d.mode()) throw SemanticError("infinite_language: mode differs from the denotation's mode");
  // Finite-state processes are finitely branching, so an infinite word is a
  // trace iff all its prefixes are (König): every infinite run of the
  // automaton is accepted. Mode bot's sink loops on every label, adding all
  // extensions of divergences. Mode d's extra words (infinitely many
  // divergent prefixes) are infinite runs already, so the acceptance set is
  // the same in all three modes.
  std::vector<std::vector<AutState>> delta(d.size(), std::vector<AutState>(d.alphabet().size()));
  for (AutState s = 0; s < d.size(); ++s) {
    for (ActionId a = 0; a < d.alphabet().size(); ++a) delta[s][a] = d.next(s, a);
  }
  return OmegaAcceptor(d.alphabet(), d.initial(), std::move(delta), std::vector<bool>(d.size(), true));
}

}  // namespace refine
