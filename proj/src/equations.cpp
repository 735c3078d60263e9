#include <chrono>
#include <functional>
#include <sstream>
#include <tuple>

#include "oracle.hpp"
#include "refine/denotation.hpp"
#include "refine/formats.hpp"
#include "refine/harness.hpp"

namespace refine {

using detail::FloodedOracle;

namespace {

constexpr FloodMode kModes[] = {FloodMode::none, FloodMode::bot, FloodMode::d};

Word prefix(const Word& w, std::size_t k) { return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)); }

bool some_prefix(const Word& w, const std::function<bool(const Word&)>& pred) {
  for (std::size_t k = 0; k <= w.size(); ++k) {
    if (pred(prefix(w, k))) return true;
  }
  return false;
}

// Right-hand side of the equations for one composite: membership of words
// and failures computed from the arguments only.
struct Rhs {
  std::function<bool(const Word&)> div;
  std::function<bool(const Word&)> ptr;
  std::function<bool(const Word&, const ActionSet&)> fail;
};

// Silent-cycle membership over an arbitrary edge predicate, by iterated
// reachability on a small graph.
std::vector<bool> on_cycle(const Lts& l, const std::function<bool(const Transition&)>& edge) {
  std::size_t n = l.num_states();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& t : l.transitions()) {
    if (edge(t)) reach[t.source][t.target] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<bool> result(n, false);
  // A state diverges iff it reaches (or is) a state lying on a cycle.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i == j || reach[i][j]) && reach[j][j]) result[i] = true;
    }
  }
  return result;
}

Rhs par_rhs(const FloodedOracle& p, const ActionSet& sync, const FloodedOracle& q, FloodMode mode,
            std::size_t universe) {
  Rhs r;
  auto div_base = [&p, &q, sync](const Word& w) {
    for (const auto& [nu, xi] : word_splits(w, sync)) {
      if ((p.div(nu) && q.ptr(xi)) || (p.ptr(nu) && q.div(xi))) return true;
    }
    return false;
  };
  r.div = [div_base, mode](const Word& w) { return mode == FloodMode::bot ? some_prefix(w, div_base) : div_base(w); };
  r.ptr = [&p, &q, sync, mode, div = r.div](const Word& w) {
    if (mode == FloodMode::bot && div(w)) return true;
    for (const auto& [nu, xi] : word_splits(w, sync)) {
      if (p.ptr(nu) && q.ptr(xi)) return true;
    }
    return false;
  };
  auto subsets = all_subsets(universe);
  r.fail = [&p, &q, sync, mode, subsets, div = r.div](const Word& w, const ActionSet& z) {
    if (mode != FloodMode::none && div(w)) return true;
    auto splits = word_splits(w, sync);
    for (const auto& [nu, xi] : splits) {
      for (const auto& x : subsets) {
        if (!x.subset_of(z) || !p.fail(nu, x)) continue;
        for (const auto& y : subsets) {
          if (!y.subset_of(z) || (x | y) != z || (x - sync) != (y - sync)) continue;
          if (q.fail(xi, y)) return true;
        }
      }
    }
    return false;
  };
  return r;
}

// Raw search on p where hidden labels and τ are free moves.
struct HideSearch {
  const Lts& p;
  ActionSet hidden;
  std::vector<bool> free_cycle;

  HideSearch(const Lts& l, const ActionSet& h)
      : p(l), hidden(h), free_cycle(on_cycle(l, [h](const Transition& t) { return t.silent() || h.contains(t.action); })) {}

  bool free(const Transition& t) const { return t.silent() || hidden.contains(t.action); }

  std::set<StateId> close(std::set<StateId> s) const {
    std::vector<StateId> stack(s.begin(), s.end());
    while (!stack.empty()) {
      StateId x = stack.back();
      stack.pop_back();
      for (const auto& t : p.transitions()) {
        if (t.source == x && free(t) && s.insert(t.target).second) stack.push_back(t.target);
      }
    }
    return s;
  }

  std::set<StateId> reach(const Word& w) const {
    std::set<StateId> cur = close({p.initial()});
    for (ActionId a : w) {
      if (hidden.contains(a)) return {};
      std::set<StateId> next;
      for (const auto& t : p.transitions()) {
        if (t.action == a && cur.count(t.source)) next.insert(t.target);
      }
      cur = close(std::move(next));
    }
    return cur;
  }
};

Rhs hide_rhs(const HideSearch& h, FloodMode mode) {
  Rhs r;
  auto div_raw = [&h](const Word& w) {
    for (StateId s : h.reach(w)) {
      if (h.free_cycle[s]) return true;
    }
    return false;
  };
  r.div = [div_raw, mode](const Word& w) { return mode == FloodMode::bot ? some_prefix(w, div_raw) : div_raw(w); };
  r.ptr = [&h, mode, div = r.div](const Word& w) {
    return !h.reach(w).empty() || (mode == FloodMode::bot && div(w));
  };
  r.fail = [&h, mode, div = r.div](const Word& w, const ActionSet& x) {
    if (mode != FloodMode::none && div(w)) return true;
    for (StateId s : h.reach(w)) {
      bool blocked = true;
      for (const auto& t : h.p.transitions()) {
        if (t.source != s) continue;
        if (h.free(t) || x.contains(t.action)) blocked = false;
      }
      if (blocked) return true;
    }
    return false;
  };
  return r;
}

// Every input word up to the depth with its image and the internal state it
// leaves the operator in.
struct StateOpTable {
  std::map<Word, std::vector<std::pair<Word, std::string>>> by_image;
};

StateOpTable state_op_table(const InterfaceSpec& m, const std::string& s0, const Alphabet& in, const Alphabet& out,
                            std::size_t depth) {
  StateOpTable t;
  for (const auto& sigma : all_words(in.size(), depth)) {
    auto [image, state] = state_op_word(m, s0, sigma, in, out);
    t.by_image[image].emplace_back(sigma, state);
  }
  return t;
}

Rhs state_rhs(const FloodedOracle& raw, const StateOpTable& table, const InterfaceSpec& m, const Alphabet& in,
              const Alphabet& out, FloodMode mode) {
  Rhs r;
  auto preimages = [&table](const Word& w) -> const std::vector<std::pair<Word, std::string>>& {
    static const std::vector<std::pair<Word, std::string>> none;
    auto it = table.by_image.find(w);
    return it == table.by_image.end() ? none : it->second;
  };
  auto div_base = [&raw, preimages](const Word& w) {
    for (const auto& [sigma, st] : preimages(w)) {
      if (raw.raw_div(sigma)) return true;
    }
    return false;
  };
  r.div = [div_base, mode](const Word& w) { return mode == FloodMode::bot ? some_prefix(w, div_base) : div_base(w); };
  r.ptr = [&raw, preimages, mode, div = r.div](const Word& w) {
    if (mode == FloodMode::bot && div(w)) return true;
    for (const auto& [sigma, st] : preimages(w)) {
      if (raw.b.partial.count(sigma)) return true;
    }
    return false;
  };
  r.fail = [&raw, &m, &in, &out, preimages, mode, div = r.div](const Word& w, const ActionSet& x) {
    if (mode != FloodMode::none && div(w)) return true;
    for (const auto& [sigma, st] : preimages(w)) {
      ActionSet inverse(in.size());
      for (ActionId a = 0; a < in.size(); ++a) {
        if (x.contains(out.id(m.action(st, in.label(a))))) inverse.insert(a);
      }
      if (raw.b.is_failure(sigma, inverse)) return true;
    }
    return false;
  };
  return r;
}

// Product of the arguments with a lasso position. Nodes are opaque tuples;
// `succ` lists (node, visible) pairs for a node, `diverges` says whether the
// composite diverges there.
using Node = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

struct LassoGraph {
  std::function<std::vector<std::pair<Node, bool>>(const Node&)> succ;
  std::function<bool(const Node&)> diverges;
  Node start;
};

struct LassoFacts {
  bool visible_cycle = false;
  bool divergence_reached = false;
};

LassoFacts lasso_facts(const LassoGraph& g) {
  std::map<Node, std::size_t> index;
  std::vector<Node> nodes;
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj;
  auto intern = [&](const Node& n) {
    auto [it, fresh] = index.emplace(n, nodes.size());
    if (fresh) {
      nodes.push_back(n);
      adj.emplace_back();
    }
    return std::pair{it->second, fresh};
  };
  LassoFacts facts;
  std::vector<std::size_t> work{intern(g.start).first};
  while (!work.empty()) {
    std::size_t i = work.back();
    work.pop_back();
    if (g.diverges(nodes[i])) facts.divergence_reached = true;
    for (const auto& [n, vis] : g.succ(nodes[i])) {
      auto [j, fresh] = intern(n);
      adj[i].emplace_back(j, vis);
      if (fresh) work.push_back(j);
    }
  }
  // Tarjan's algorithm; a visible edge inside one component closes a cycle.
  std::size_t n = nodes.size(), counter = 0;
  std::vector<std::size_t> low(n), num(n, SIZE_MAX), comp(n, SIZE_MAX);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t ncomp = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    num[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto& [w, vis] : adj[v]) {
      if (num[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (num[v] == SIZE_MAX) visit(v);
  }
  for (std::size_t v = 0; v < n && !facts.visible_cycle; ++v) {
    for (const auto& [w, vis] : adj[v]) {
      if (vis && comp[v] == comp[w]) facts.visible_cycle = true;
    }
  }
  return facts;
}

struct Lasso {
  Word u, v;
  std::size_t length() const { return u.size() + v.size(); }
  ActionId letter(std::size_t pos) const { return pos < u.size() ? u[pos] : v[pos - u.size()]; }
  std::uint32_t next(std::size_t pos) const {
    return static_cast<std::uint32_t>(pos + 1 == length() ? u.size() : pos + 1);
  }
};

std::vector<Lasso> small_lassos(std::size_t universe) {
  std::vector<Lasso> out;
  for (const auto& u : all_words(universe, 2)) {
    for (const auto& v : all_words(universe, 2)) {
      if (!v.empty()) out.push_back({u, v});
    }
  }
  return out;
}

std::string mode_name(FloodMode m) { return std::string(to_string(m)); }

struct Instance {
  Lts p, q;
  ActionSet sync, hidden;
  InterfaceSpec m;
  std::string s0;
};

std::string describe_instance(const Instance& in, const std::string& op) {
  const Alphabet& a = in.p.alphabet();
  std::ostringstream out;
  if (op == "par") {
    out << reproducer({{"P", in.p}, {"Q", in.q}}, "ltsrefine -d . explore 'P |[ " + format_set(in.sync, a) + " ]| Q'");
  } else if (op == "hide") {
    out << reproducer({{"P", in.p}}, "ltsrefine -d . explore 'hide " + format_set(in.hidden, a) + " in P'");
  } else {
    out << "--- M.iface ---\n" << serialise_interface(in.m);
    out << reproducer({{"P", in.p}}, "ltsrefine -d . explore 'state M @ " + in.s0 + " in P'");
  }
  return out.str();
}

// Compares one composite against its right-hand side in one mode. Returns
// the first discrepancy, if any.
std::optional<std::string> compare(const Lts& composite, FloodMode mode, const Rhs& rhs, const LassoFacts* facts,
                                   const std::vector<Lasso>& lassos, std::size_t depth) {
  DenotationAutomaton d = denote(composite, mode);
  const Alphabet& a = composite.alphabet();
  auto subsets = all_subsets(a.size());
  for (const auto& w : all_words(a.size(), depth)) {
    bool lhs_div = query_divergence(d, w), rhs_div = rhs.div(w);
    if (lhs_div != rhs_div) return "divergence " + format_word(w, a) + ": engine " + std::to_string(lhs_div);
    bool lhs_ptr = query_trace(d, w), rhs_ptr = rhs.ptr(w);
    if (lhs_ptr != rhs_ptr) return "trace " + format_word(w, a) + ": engine " + std::to_string(lhs_ptr);
    for (const auto& x : subsets) {
      bool lhs = query_failure(d, {w, x}), r = rhs.fail(w, x);
      if (lhs != r) {
        return "failure <" + format_word(w, a) + ", " + format_set(x, a) + ">: engine " + std::to_string(lhs);
      }
    }
  }
  OmegaAcceptor inf = infinite_language(d, mode);
  for (std::size_t i = 0; i < lassos.size(); ++i) {
    bool lhs = inf.accepts_lasso(lassos[i].u, lassos[i].v);
    bool r = facts[i].visible_cycle || (mode == FloodMode::bot && facts[i].divergence_reached);
    if (lhs != r) {
      return "infinite " + format_word(lassos[i].u, a) + " (" + format_word(lassos[i].v, a) + ")^w: engine " +
             std::to_string(lhs);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<SuiteReport> check_compositional_equations(std::size_t samples, std::size_t depth, std::uint64_t seed) {
  const char* ops[] = {"par", "hide", "state_op"};
  std::vector<SuiteReport> reports;
  for (const char* op : ops) {
    for (FloodMode m : kModes) reports.push_back({std::string("equations ") + op + " " + mode_name(m)});
  }
  std::vector<double> seconds(reports.size(), 0);

  GenConfig cfg;
  cfg.max_states = 4;
  cfg.seed = seed;
  Sampler sampler(cfg);
  std::uniform_int_distribution<std::size_t> size_dist(1, 3);
  const std::vector<std::string> outputs = {"a", "b", "x", "y"};

  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t k = size_dist(sampler.rng());
    Instance in{sampler.next(k), sampler.next(k), sampler.subset(k), sampler.subset(k), {}, "s0"};
    in.m = sampler.interface(in.p.alphabet(), outputs);
    const Alphabet& alpha = in.p.alphabet();

    std::size_t r = 0;
    for (const char* op : ops) {
      auto start = std::chrono::steady_clock::now();
      std::string name = op;
      std::optional<Lts> composite;
      std::optional<FloodedOracle> po[3], qo[3];
      std::optional<HideSearch> hs;
      std::optional<StateOpTable> table;
      Alphabet out_alpha;
      LassoGraph graph;
      std::vector<bool> p_div = on_cycle(in.p, [](const Transition& t) { return t.silent(); });
      std::vector<bool> q_div = on_cycle(in.q, [](const Transition& t) { return t.silent(); });

      if (name == "par") {
        composite = par(in.p, in.sync, in.q);
        graph.start = {in.p.initial(), in.q.initial(), 0};
        graph.diverges = [p_div, q_div](const Node& n) { return p_div[std::get<0>(n)] || q_div[std::get<1>(n)]; };
      } else if (name == "hide") {
        composite = hide(in.p, in.hidden);
        hs.emplace(in.p, in.hidden);
        graph.start = {in.p.initial(), 0, 0};
        graph.diverges = [&hs](const Node& n) { return hs->free_cycle[std::get<0>(n)]; };
      } else {
        composite = state_op(in.m, in.s0, in.p);
        out_alpha = composite->alphabet();
        table = state_op_table(in.m, in.s0, alpha, out_alpha, depth);
        graph.start = {in.p.initial(), 0, 0};
        graph.diverges = [p_div](const Node& n) { return p_div[std::get<0>(n)]; };
      }

      const Alphabet& ca = composite->alphabet();
      auto lassos = small_lassos(ca.size());
      std::vector<LassoFacts> facts;
      facts.reserve(lassos.size());
      const auto& states = in.m.states();
      for (const auto& lasso : lassos) {
        LassoGraph g = graph;
        if (name == "par") {
          const Lts& p = in.p;
          const Lts& q = in.q;
          ActionSet sync = in.sync;
          g.succ = [&p, &q, sync, lasso](const Node& n) {
            auto [x, y, pos] = n;
            std::vector<std::pair<Node, bool>> out;
            ActionId want = lasso.letter(pos);
            for (const auto& t : p.outgoing(x)) {
              if (t.silent()) out.push_back({{t.target, y, pos}, false});
              else if (t.action == want && !sync.contains(want)) out.push_back({{t.target, y, lasso.next(pos)}, true});
              else if (t.action == want) {
                for (const auto& u : q.outgoing(y)) {
                  if (u.action == want) out.push_back({{t.target, u.target, lasso.next(pos)}, true});
                }
              }
            }
            for (const auto& u : q.outgoing(y)) {
              if (u.silent()) out.push_back({{x, u.target, pos}, false});
              else if (u.action == want && !sync.contains(want)) out.push_back({{x, u.target, lasso.next(pos)}, true});
            }
            return out;
          };
        } else if (name == "hide") {
          const Lts& p = in.p;
          ActionSet hidden = in.hidden;
          g.succ = [&p, hidden, lasso](const Node& n) {
            auto [x, y, pos] = n;
            std::vector<std::pair<Node, bool>> out;
            for (const auto& t : p.outgoing(x)) {
              if (t.silent() || hidden.contains(t.action)) out.push_back({{t.target, y, pos}, false});
              else if (t.action == lasso.letter(pos)) out.push_back({{t.target, y, lasso.next(pos)}, true});
            }
            return out;
          };
        } else {
          const Lts& p = in.p;
          const InterfaceSpec& m = in.m;
          g.succ = [&p, &m, &states, &alpha, &ca, lasso](const Node& n) {
            auto [x, st, pos] = n;
            std::vector<std::pair<Node, bool>> out;
            const std::string& s = states[st];
            for (const auto& t : p.outgoing(x)) {
              if (t.silent()) {
                out.push_back({{t.target, st, pos}, false});
                continue;
              }
              const std::string& label = alpha.label(t.action);
              if (ca.id(m.action(s, label)) != lasso.letter(pos)) continue;
              auto it = std::find(states.begin(), states.end(), m.effect(s, label));
              auto next_state = static_cast<std::uint32_t>(it - states.begin());
              out.push_back({{t.target, next_state, lasso.next(pos)}, true});
            }
            return out;
          };
          auto it = std::find(states.begin(), states.end(), in.s0);
          g.start = {in.p.initial(), static_cast<std::uint32_t>(it - states.begin()), 0};
        }
        facts.push_back(lasso_facts(g));
      }

      for (FloodMode mode : kModes) {
        std::size_t mi = static_cast<std::size_t>(mode);
        Rhs rhs;
        if (name == "par") {
          po[mi].emplace(in.p, depth, mode);
          qo[mi].emplace(in.q, depth, mode);
          rhs = par_rhs(*po[mi], in.sync, *qo[mi], mode, ca.size());
        } else if (name == "hide") {
          rhs = hide_rhs(*hs, mode);
        } else {
          po[0].emplace(in.p, depth, FloodMode::none);
          rhs = state_rhs(*po[0], *table, in.m, alpha, out_alpha, mode);
        }
        SuiteReport& rep = reports[r + mi];
        ++rep.cases;
        ++rep.decided;
        if (composite->num_states() > 1 && !composite->transitions().empty()) ++rep.interesting;
        if (auto bad = compare(*composite, mode, rhs, facts.data(), lassos, depth)) {
          rep.violations.push_back("sample " + std::to_string(i) + ": " + *bad + "\n" + describe_instance(in, name));
        }
      }
      double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (std::size_t mi = 0; mi < 3; ++mi) seconds[r + mi] += spent / 3;
      r += 3;
    }
  }
  for (std::size_t i = 0; i < reports.size(); ++i) reports[i].seconds = seconds[i];
  return reports;
}

}  // namespace refine
