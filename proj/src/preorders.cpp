#include "refine/preorders.hpp"

#include <chrono>
#include <deque>
#include <map>
#include <sstream>

#include "refine/error.hpp"

namespace refine {

std::string_view to_string(PreorderKind kind) {
  switch (kind) {
    case PreorderKind::safety: return "safety";
    case PreorderKind::liveness: return "liveness";
    case PreorderKind::cond_liveness: return "cond-liveness";
    case PreorderKind::lt: return "lt";
  }
  return "?";
}

PreorderKind parse_preorder_kind(std::string_view text) {
  if (text == "safety") return PreorderKind::safety;
  if (text == "liveness") return PreorderKind::liveness;
  if (text == "cond-liveness" || text == "cond_liveness") return PreorderKind::cond_liveness;
  if (text == "lt") return PreorderKind::lt;
  throw SemanticError("unknown preorder '" + std::string(text) + "'");
}

std::string_view to_string(Witness::Kind kind) {
  switch (kind) {
    case Witness::Kind::trace: return "trace";
    case Witness::Kind::failure: return "failure";
    case Witness::Kind::divergence: return "divergence";
    case Witness::Kind::infinite_lasso: return "infinite";
  }
  return "?";
}

std::string Witness::describe(const Alphabet& alphabet) const {
  switch (kind) {
    case Kind::trace: return "trace " + format_word(trace, alphabet);
    case Kind::divergence: return "divergence " + format_word(trace, alphabet);
    case Kind::failure:
      return "failure <" + format_word(trace, alphabet) + ", " + format_set(refusal, alphabet) + ">";
    case Kind::infinite_lasso:
      return "infinite " + format_word(trace, alphabet) + " (" + format_word(cycle, alphabet) + ")^w";
  }
  return {};
}

namespace {

// Synchronous product of q's automaton with p's. The p side may die
// (kNoState) while q continues. Nodes are numbered in BFS order with
// letters tried in alphabet order, so the path to each node is its
// shortlex-least access word.
struct Product {
  struct Node {
    AutState q;
    AutState p;
    std::size_t parent;
    ActionId letter;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::size_t>> succ;  // per node, per letter; npos if absent

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Word path(std::size_t n) const {
    Word w;
    for (; n != 0; n = nodes[n].parent) w.push_back(nodes[n].letter);
    return Word(w.rbegin(), w.rend());
  }
};

template <typename Stop>
Product explore(const DenotationAutomaton& dq, const DenotationAutomaton& dp, Stop stop) {
  Product prod;
  std::map<std::pair<AutState, AutState>, std::size_t> index;
  const std::size_t n = dq.alphabet().size();
  prod.nodes.push_back({dq.initial(), dp.initial(), 0, 0});
  prod.succ.emplace_back(n, Product::npos);
  index[{dq.initial(), dp.initial()}] = 0;
  for (std::size_t i = 0; i < prod.nodes.size(); ++i) {
    auto [q, p, parent, letter] = prod.nodes[i];
    if (stop(q, p)) continue;
    for (ActionId a = 0; a < n; ++a) {
      AutState q2 = dq.next(q, a);
      if (q2 == kNoState) continue;
      AutState p2 = dp.next(p, a);
      auto [it, inserted] = index.emplace(std::pair{q2, p2}, prod.nodes.size());
      if (inserted) {
        prod.nodes.push_back({q2, p2, i, a});
        prod.succ.emplace_back(n, Product::npos);
      }
      prod.succ[i][a] = it->second;
    }
  }
  return prod;
}

std::optional<Witness> divergence_gap(const Product& prod, const DenotationAutomaton& dq,
                                      const DenotationAutomaton& dp) {
  for (std::size_t i = 0; i < prod.nodes.size(); ++i) {
    auto [q, p, parent, letter] = prod.nodes[i];
    if (!dq.state(q).divergent) continue;
    if (p != kNoState && dp.state(p).divergent) continue;
    Witness w;
    w.kind = Witness::Kind::divergence;
    w.trace = prod.path(i);
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> failure_gap(const Product& prod, const DenotationAutomaton& dq,
                                   const DenotationAutomaton& dp) {
  for (std::size_t i = 0; i < prod.nodes.size(); ++i) {
    auto [q, p, parent, letter] = prod.nodes[i];
    for (const auto& x : dq.state(q).refusals) {
      if (dp.refuses(p, x)) continue;
      Witness w;
      w.kind = Witness::Kind::failure;
      w.trace = prod.path(i);
      w.refusal = x;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> trace_gap(const Product& prod) {
  for (std::size_t i = 0; i < prod.nodes.size(); ++i) {
    if (prod.nodes[i].p != kNoState) continue;
    Witness w;
    w.kind = Witness::Kind::trace;
    w.trace = prod.path(i);
    return w;
  }
  return std::nullopt;
}

// An ultimately periodic word accepted by aq and rejected by ap exists iff
// some reachable cycle of the product contains an aq-accepting node and no
// ap-accepting node (a dead p run counts as rejecting).
std::optional<Witness> omega_gap(const Product& prod, const OmegaAcceptor& aq, const OmegaAcceptor& ap) {
  const std::size_t n = prod.nodes.size();
  std::vector<bool> allowed(n);
  for (std::size_t i = 0; i < n; ++i) allowed[i] = !ap.accepting(prod.nodes[i].p);
  for (std::size_t x = 0; x < n; ++x) {
    if (!allowed[x] || !aq.accepting(prod.nodes[x].q)) continue;
    // Shortest nonempty path x -> x inside the allowed nodes.
    std::vector<std::pair<std::size_t, ActionId>> parent(n, {Product::npos, 0});
    std::deque<std::size_t> queue;
    std::size_t closing = Product::npos;
    ActionId closing_letter = 0;
    queue.push_back(x);
    std::vector<bool> seen(n, false);
    while (!queue.empty() && closing == Product::npos) {
      std::size_t s = queue.front();
      queue.pop_front();
      for (ActionId a = 0; a < prod.succ[s].size(); ++a) {
        std::size_t t = prod.succ[s][a];
        if (t == Product::npos || !allowed[t]) continue;
        if (t == x) {
          closing = s;
          closing_letter = a;
          break;
        }
        if (seen[t]) continue;
        seen[t] = true;
        parent[t] = {s, a};
        queue.push_back(t);
      }
    }
    if (closing == Product::npos) continue;
    Word cycle{closing_letter};
    for (std::size_t s = closing; s != x; s = parent[s].first) cycle.push_back(parent[s].second);
    Witness w;
    w.kind = Witness::Kind::infinite_lasso;
    w.trace = prod.path(x);
    w.cycle = Word(cycle.rbegin(), cycle.rend());
    return w;
  }
  return std::nullopt;
}

}  // namespace

Verdict refines(const Lts& p, const Lts& q, PreorderKind kind) {
  if (p.alphabet() != q.alphabet()) throw SemanticError("refinement check needs equal alphabets");
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.kind = kind;
  auto refute = [&](const char* component, std::optional<Witness> w) {
    if (!w || !v.holds) return;
    v.holds = false;
    v.component = component;
    v.witness = std::move(w);
  };

  if (kind == PreorderKind::safety) {
    auto dp = denote(p, FloodMode::none);
    auto dq = denote(q, FloodMode::none);
    v.p_states = dp.size();
    v.q_states = dq.size();
    auto prod = explore(dq, dp, [](AutState, AutState p2) { return p2 == kNoState; });
    refute("traces", trace_gap(prod));
  } else {
    const FloodMode mode = kind == PreorderKind::liveness ? FloodMode::bot : FloodMode::d;
    auto dp = denote(p, mode);
    auto dq = denote(q, mode);
    v.p_states = dp.size();
    v.q_states = dq.size();
    auto prod = explore(dq, dp, [&](AutState, AutState p2) {
      return mode == FloodMode::bot && p2 != kNoState && dp.state(p2).flooded;
    });
    refute("divergences", divergence_gap(prod, dq, dp));
    refute("failures", failure_gap(prod, dq, dp));
    if (v.holds) {
      if (kind == PreorderKind::lt) {
        // Raw infinite traces: the unflooded automata.
        auto rp = denote(p, FloodMode::none);
        auto rq = denote(q, FloodMode::none);
        auto raw = explore(rq, rp, [](AutState, AutState) { return false; });
        refute("infinite",
               omega_gap(raw, infinite_language(rq, FloodMode::none), infinite_language(rp, FloodMode::none)));
      } else {
        refute("infinite", omega_gap(prod, infinite_language(dq, mode), infinite_language(dp, mode)));
      }
    }
  }
  v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Verdict equivalent(const Lts& p, const Lts& q, PreorderKind kind) {
  Verdict forward = refines(p, q, kind);
  if (!forward.holds) return forward;
  Verdict backward = refines(q, p, kind);
  backward.converse = true;
  backward.millis += forward.millis;
  std::swap(backward.p_states, backward.q_states);
  return backward;
}

bool dd_preorder(const Lts& p, const Lts& q) { return refines(q, p, PreorderKind::cond_liveness).holds; }

std::optional<Word> deadlock_divergence_counterexample(const Lts& p, const Lts& q) {
  if (p.alphabet() != q.alphabet()) throw SemanticError("refinement check needs equal alphabets");
  auto dp = denote(p, FloodMode::none);
  auto dq = denote(q, FloodMode::none);
  auto prod = explore(dq, dp, [](AutState, AutState) { return false; });
  auto dd = [](const DenotationAutomaton& d, AutState s) {
    return s != kNoState && (d.state(s).deadlock || d.state(s).divergent);
  };
  for (std::size_t i = 0; i < prod.nodes.size(); ++i) {
    if (dd(dq, prod.nodes[i].q) && !dd(dp, prod.nodes[i].p)) return prod.path(i);
  }
  return std::nullopt;
}

std::string format_verdict(const Verdict& v, const Alphabet& alphabet, bool with_witness) {
  std::ostringstream out;
  out << "preorder: " << to_string(v.kind) << '\n';
  out << "verdict: " << (v.holds ? "holds" : "refuted") << '\n';
  if (!v.holds) {
    out << "direction: " << (v.converse ? "right-to-left" : "left-to-right") << '\n';
    out << "component: " << v.component << '\n';
    if (with_witness && v.witness) {
      const Witness& w = *v.witness;
      out << "witness-kind: " << to_string(w.kind) << '\n';
      out << "witness-trace: " << format_word(w.trace, alphabet) << '\n';
      if (w.kind == Witness::Kind::failure) out << "witness-refusal: " << format_set(w.refusal, alphabet) << '\n';
      if (w.kind == Witness::Kind::infinite_lasso) out << "witness-cycle: " << format_word(w.cycle, alphabet) << '\n';
    }
  }
  out << "left-states: " << v.p_states << '\n';
  out << "right-states: " << v.q_states << '\n';
  out << "time-ms: " << v.millis << '\n';
  return out.str();
}

}  // namespace refine
