#include "refine/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "oracle.hpp"
#include "refine/constructions.hpp"
#include "refine/denotation.hpp"
#include "refine/formats.hpp"

namespace refine {

using detail::FloodedOracle;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

Lts with_transitions(const Lts& l, std::vector<Transition> ts) {
  return Lts(l.alphabet(), l.num_states(), l.initial(), std::move(ts));
}

std::string kind_name(PreorderKind k) { return std::string(to_string(k)); }

std::string check_command(const std::string& left, const std::string& right, PreorderKind kind) {
  return "ltsrefine check " + left + ".aut " + right + ".aut --preorder " + kind_name(kind) + " --witness";
}

// Pairs of related processes over one alphabet: independent, a sub-LTS, an
// internal choice, or a process with one extra edge.
std::pair<Lts, Lts> random_pair(Sampler& s, std::size_t k) {
  auto& rng = s.rng();
  switch (pick(rng, 0, 3)) {
    case 0: return {s.next(k), s.next(k)};
    case 1: {
      Lts p = s.next(k);
      std::vector<Transition> kept;
      for (const auto& t : p.transitions()) {
        if (coin(rng, 0.75)) kept.push_back(t);
      }
      return {p, with_transitions(p, kept)};
    }
    case 2: {
      Lts q = s.next(k);
      return {internal_choice(q, s.next(k)), q};
    }
    default: {
      Lts p = s.next(k);
      auto ts = p.transitions();
      StateId a = static_cast<StateId>(pick(rng, 0, p.num_states() - 1));
      StateId b = static_cast<StateId>(pick(rng, 0, p.num_states() - 1));
      ActionId act = coin(rng, 0.2) ? kSilent : static_cast<ActionId>(pick(rng, 0, k - 1));
      ts.push_back({a, act, b});
      return {p, with_transitions(p, ts)};
    }
  }
}

FloodMode witness_mode(PreorderKind kind) { return kind == PreorderKind::liveness ? FloodMode::bot : FloodMode::d; }

std::vector<std::pair<PreorderKind, const Verdict*>> verdicts_of(const SampledPair& sp) {
  return {{PreorderKind::lt, &sp.lt}, {PreorderKind::cond_liveness, &sp.cond}, {PreorderKind::liveness, &sp.live}};
}

std::string pair_reproducer(const Lts& p, const Lts& q, PreorderKind kind) {
  return reproducer({{"P", p}, {"Q", q}}, check_command("P", "Q", kind));
}

WordSet random_words(Sampler& s, const Alphabet& a, std::size_t count, std::size_t lo, std::size_t hi) {
  std::set<Word> words;
  for (std::size_t i = 0; i < count; ++i) words.insert(s.word(a.size(), lo, hi));
  return WordSet::finite(a, std::move(words));
}

PropertySpec random_spec(Sampler& s, const Alphabet& a, PropertySpec::Kind kind) {
  auto& rng = s.rng();
  switch (kind) {
    case PropertySpec::Kind::safety: return PropertySpec::safety(random_words(s, a, pick(rng, 1, 3), 1, 3));
    case PropertySpec::Kind::liveness:
      if (coin(rng, 0.25)) return PropertySpec::liveness(WordSet::containing(a, a.label(pick(rng, 0, a.size() - 1))));
      return PropertySpec::liveness(random_words(s, a, pick(rng, 1, 4), 1, 2));
    case PropertySpec::Kind::cond_liveness:
      return PropertySpec::cond_liveness(random_words(s, a, pick(rng, 1, 2), 1, 2),
                                         random_words(s, a, pick(rng, 1, 4), 1, 3));
  }
  return PropertySpec::safety(random_words(s, a, 1, 1, 1));
}

PropertySpec::Kind random_class(Sampler& s, PreorderKind kind) {
  using K = PropertySpec::Kind;
  switch (kind) {
    case PreorderKind::safety: return K::safety;
    case PreorderKind::liveness: return K::liveness;
    case PreorderKind::cond_liveness: return coin(s.rng()) ? K::liveness : K::cond_liveness;
    case PreorderKind::lt: return static_cast<K>(pick(s.rng(), 0, 2));
  }
  return K::safety;
}

Lts make_lts(const Alphabet& a, std::size_t n, std::vector<std::tuple<StateId, std::string, StateId>> edges) {
  std::vector<Transition> ts;
  for (const auto& [s, label, t] : edges) ts.push_back({s, label == "tau" ? kSilent : a.id(label), t});
  return Lts(a, n, 0, std::move(ts));
}

// Liveness-style refutation with a divergence or failure witness, separated
// by its tester. Returns an error message or nullopt.
std::optional<std::string> separation_error(const Lts& p, const Lts& q, const Verdict& v) {
  const Alphabet& a = p.alphabet();
  try {
    DistinguishingTest t =
        liveness_distinguishing_tester(*v.witness, v.kind, a, fresh_label(a, "g"), fresh_label(a, "c"));
    bool sp = satisfies(t.apply(p), t.property).holds;
    bool sq = satisfies(t.apply(q), t.property).holds;
    if (sp && !sq) return std::nullopt;
    return "tester for " + v.witness->describe(a) + ": C[p] " + (sp ? "satisfies" : "violates") + ", C[q] " +
           (sq ? "satisfies" : "violates");
  } catch (const std::exception& e) {
    return std::string("tester construction failed: ") + e.what();
  }
}

}  // namespace

Alphabet letter_alphabet(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
  }
  return Alphabet(std::move(labels));
}

Lts gen_lts(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::size_t n = pick(rng, 1, std::max<std::size_t>(1, cfg.max_states));
  Alphabet a = letter_alphabet(cfg.alphabet_size);
  std::vector<Transition> ts;
  for (StateId s = 0; s < n; ++s) {
    for (StateId t = 0; t < n; ++t) {
      if (!coin(rng, cfg.density)) continue;
      bool silent = a.empty() || coin(rng, cfg.silent_prob);
      ts.push_back({s, silent ? kSilent : static_cast<ActionId>(pick(rng, 0, a.size() - 1)), t});
    }
  }
  return Lts(std::move(a), n, 0, std::move(ts));
}

Sampler::Sampler(GenConfig base, std::size_t divergent_every)
    : base_(base), divergent_every_(divergent_every), rng_(base.seed) {}

Lts Sampler::next() { return next(base_.alphabet_size); }

Lts Sampler::next(std::size_t alphabet_size) {
  ++count_;
  GenConfig cfg = base_;
  cfg.alphabet_size = alphabet_size;
  cfg.seed = base_.seed ^ (count_ * 0x9E3779B97F4A7C15ULL);
  Lts l = gen_lts(cfg);
  if (divergent_every_ == 0 || count_ % divergent_every_ != 0) return l;
  auto ts = l.transitions();
  StateId s = static_cast<StateId>(pick(rng_, 0, l.num_states() - 1));
  StateId t = static_cast<StateId>(pick(rng_, 0, l.num_states() - 1));
  ts.push_back({s, kSilent, t});
  ts.push_back({t, kSilent, s});
  return with_transitions(l, std::move(ts));
}

ActionSet Sampler::subset(std::size_t universe) {
  ActionSet x(universe);
  for (ActionId a = 0; a < universe; ++a) {
    if (coin(rng_)) x.insert(a);
  }
  return x;
}

Word Sampler::word(std::size_t universe, std::size_t lo, std::size_t hi) {
  if (universe == 0) return {};
  Word w(pick(rng_, lo, hi));
  for (auto& a : w) a = static_cast<ActionId>(pick(rng_, 0, universe - 1));
  return w;
}

InterfaceSpec Sampler::interface(const Alphabet& inputs, const std::vector<std::string>& outputs) {
  std::vector<std::string> states;
  for (std::size_t i = 0, n = pick(rng_, 1, 3); i < n; ++i) states.push_back("s" + std::to_string(i));
  InterfaceSpec m(states);
  for (const auto& s : states) {
    for (const auto& label : inputs.labels()) {
      InterfaceSpec::Outcome out;
      if (!coin(rng_, 0.25)) out.action = outputs[pick(rng_, 0, outputs.size() - 1)];
      out.next = states[pick(rng_, 0, states.size() - 1)];
      m.add_rule({s, label}, out);
    }
  }
  return m;
}

Lts internal_choice(const Lts& q, const Lts& r) {
  Alphabet a = q.alphabet().merged(r.alphabet());
  Lts ql = q.with_alphabet(a), rl = r.with_alphabet(a);
  auto shift = [](StateId s, std::size_t by) { return static_cast<StateId>(s + by); };
  std::size_t oq = 1, orr = 1 + q.num_states();
  std::vector<Transition> ts{{0, kSilent, shift(q.initial(), oq)}, {0, kSilent, shift(r.initial(), orr)}};
  for (const auto& t : ql.transitions()) ts.push_back({shift(t.source, oq), t.action, shift(t.target, oq)});
  for (const auto& t : rl.transitions()) ts.push_back({shift(t.source, orr), t.action, shift(t.target, orr)});
  return Lts(a, 1 + q.num_states() + r.num_states(), 0, std::move(ts));
}

std::string reproducer(const std::vector<std::pair<std::string, Lts>>& processes, const std::string& command) {
  std::ostringstream out;
  for (const auto& [name, l] : processes) out << "--- " << name << ".aut ---\n" << serialise_lts(l);
  out << "--- command ---\n$ " << command << '\n';
  return out.str();
}

std::string SuiteReport::format() const {
  std::ostringstream out;
  out << name << ": cases=" << cases << " decided=" << decided << " interesting=" << interesting
      << " violations=" << violations.size() << " time=" << std::fixed << std::setprecision(2) << seconds << "s\n";
  for (std::size_t i = 0; i < violations.size() && i < 3; ++i) out << violations[i] << '\n';
  return out.str();
}

SuiteReport safety_characterisation_suite(std::size_t samples, std::size_t depth, std::uint64_t seed) {
  auto start = Clock::now();
  SuiteReport rep{"safety characterisation"};
  GenConfig cfg;
  cfg.seed = seed;
  Sampler s(cfg);
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t k = pick(s.rng(), 1, 3);
    auto [p, q] = random_pair(s, k);
    Verdict v = refines(p, q, PreorderKind::safety);
    BoundedTraces bp = enumerate_bounded(p, depth), bq = enumerate_bounded(q, depth);
    bool included = std::includes(bp.partial.begin(), bp.partial.end(), bq.partial.begin(), bq.partial.end());
    ++rep.cases;
    std::string problem;
    if (v.holds) {
      ++rep.decided;
      ++rep.interesting;
      if (!included) problem = "engine holds but a bounded trace of q is missing from p";
    } else {
      const Word& w = v.witness->trace;
      if (w.size() <= depth) {
        ++rep.decided;
        if (!bq.partial.count(w) || bp.partial.count(w)) problem = "witness " + format_word(w, p.alphabet()) + " does not replay";
      } else if (!included) {
        problem = "bounded traces differ but the witness is longer than the depth";
      }
    }
    if (!problem.empty()) {
      rep.violations.push_back("sample " + std::to_string(i) + ": " + problem + "\n" +
                               pair_reproducer(p, q, PreorderKind::safety));
    }
  }
  rep.seconds = since(start);
  return rep;
}

std::vector<SampledPair> sample_pairs(std::size_t samples, std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  Sampler s(cfg);
  std::vector<SampledPair> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    auto [p, q] = random_pair(s, pick(s.rng(), 1, 3));
    Verdict lt = refines(p, q, PreorderKind::lt);
    Verdict cond = refines(p, q, PreorderKind::cond_liveness);
    Verdict live = refines(p, q, PreorderKind::liveness);
    out.push_back({std::move(p), std::move(q), lt, cond, live});
  }
  return out;
}

SuiteReport preorder_chain_suite(const std::vector<SampledPair>& pairs) {
  auto start = Clock::now();
  SuiteReport rep{"preorder chain"};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& sp = pairs[i];
    ++rep.cases;
    ++rep.decided;
    if (sp.lt.holds) ++rep.interesting;
    std::string problem;
    if (sp.lt.holds && !sp.cond.holds) problem = "lt holds but cond-liveness is refuted";
    if (sp.cond.holds && !sp.live.holds) problem = "cond-liveness holds but liveness is refuted";
    if (!problem.empty()) {
      rep.violations.push_back("pair " + std::to_string(i) + ": " + problem + "\n" +
                               pair_reproducer(sp.p, sp.q, PreorderKind::liveness));
    }
  }
  rep.seconds = since(start);
  return rep;
}

SuiteReport witness_soundness_suite(const std::vector<SampledPair>& pairs) {
  auto start = Clock::now();
  SuiteReport rep{"witness soundness"};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& sp = pairs[i];
    const Alphabet& a = sp.p.alphabet();
    for (const auto& [kind, v] : verdicts_of(sp)) {
      if (v->holds) continue;
      ++rep.cases;
      std::string problem;
      if (!v->witness) {
        problem = "refuted without a witness";
      } else {
        const Witness& w = *v->witness;
        FloodMode mode = witness_mode(kind);
        std::size_t depth = w.trace.size();
        switch (w.kind) {
          case Witness::Kind::divergence: {
            ++rep.decided;
            FloodedOracle po(sp.p, depth, mode), qo(sp.q, depth, mode);
            if (!qo.div(w.trace) || po.div(w.trace)) problem = "divergence does not replay";
            break;
          }
          case Witness::Kind::failure: {
            ++rep.decided;
            FloodedOracle po(sp.p, depth, mode), qo(sp.q, depth, mode);
            if (!qo.fail(w.trace, w.refusal) || po.fail(w.trace, w.refusal)) problem = "failure does not replay";
            break;
          }
          case Witness::Kind::infinite_lasso: {
            ++rep.interesting;
            FloodMode m = kind == PreorderKind::liveness ? FloodMode::bot : FloodMode::none;
            bool inq = infinite_language(denote(sp.q, m), m).accepts_lasso(w.trace, w.cycle);
            bool inp = infinite_language(denote(sp.p, m), m).accepts_lasso(w.trace, w.cycle);
            if (!inq || inp) problem = "lasso does not replay";
            break;
          }
          case Witness::Kind::trace: problem = "trace witness for a liveness-style preorder"; break;
        }
        if (!problem.empty()) problem += ": " + w.describe(a);
      }
      if (!problem.empty()) {
        rep.violations.push_back("pair " + std::to_string(i) + " " + kind_name(kind) + ": " + problem + "\n" +
                                 pair_reproducer(sp.p, sp.q, kind));
      }
    }
  }
  rep.seconds = since(start);
  return rep;
}

SuiteReport gadget_separation_suite(const std::vector<SampledPair>& pairs) {
  auto start = Clock::now();
  SuiteReport rep{"gadget separation"};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& sp = pairs[i];
    for (const auto& [kind, v] : verdicts_of(sp)) {
      if (v->holds || !v->witness) continue;
      auto wk = v->witness->kind;
      bool supported = wk == Witness::Kind::divergence || wk == Witness::Kind::failure ||
                       (wk == Witness::Kind::infinite_lasso && kind == PreorderKind::liveness);
      if (!supported) continue;
      ++rep.cases;
      ++rep.decided;
      if (wk == Witness::Kind::failure) ++rep.interesting;
      if (auto err = separation_error(sp.p, sp.q, *v)) {
        rep.violations.push_back("pair " + std::to_string(i) + " " + kind_name(kind) + ": " + *err + "\n" +
                                 pair_reproducer(sp.p, sp.q, kind));
      }
    }
  }
  rep.seconds = since(start);
  return rep;
}

SuiteReport dd_suite(const std::vector<SampledPair>& pairs, std::size_t depth) {
  auto start = Clock::now();
  SuiteReport rep{"deadlock/divergence"};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& sp = pairs[i];
    ++rep.cases;
    std::string problem;
    if (dd_preorder(sp.q, sp.p) != sp.cond.holds) problem = "dd_preorder disagrees with cond-liveness";
    if (sp.cond.holds) {
      ++rep.decided;
      ++rep.interesting;
      BoundedTraces bp = enumerate_bounded(sp.p, depth), bq = enumerate_bounded(sp.q, depth);
      for (const auto& w : bq.complete) {
        if (!bp.complete.count(w)) problem = "complete trace " + format_word(w, sp.p.alphabet()) + " of q missing in p";
      }
      if (auto w = deadlock_divergence_counterexample(sp.p, sp.q)) {
        problem = "engine counterexample " + format_word(*w, sp.p.alphabet());
      }
    }
    if (!problem.empty()) {
      rep.violations.push_back("pair " + std::to_string(i) + ": " + problem + "\n" +
                               pair_reproducer(sp.p, sp.q, PreorderKind::cond_liveness));
    }
  }
  rep.seconds = since(start);
  return rep;
}

SuiteReport respects_suite(PreorderKind kind, std::size_t pairs, std::size_t specs_per_pair, std::uint64_t seed) {
  auto start = Clock::now();
  SuiteReport rep{"respects " + kind_name(kind)};
  GenConfig cfg;
  cfg.seed = seed;
  Sampler s(cfg);
  for (std::size_t i = 0; i < pairs; ++i) {
    std::size_t k = pick(s.rng(), 1, 3);
    std::optional<std::pair<Lts, Lts>> pair;
    if (i % 2 == 1) {
      for (int attempt = 0; attempt < 20 && !pair; ++attempt) {
        auto candidate = random_pair(s, k);
        if (refines(candidate.first, candidate.second, kind).holds) pair = std::move(candidate);
      }
    }
    if (!pair) {
      Lts q = s.next(k);
      pair.emplace(internal_choice(q, s.next(k)), q);
    }
    const Alphabet& a = pair->first.alphabet();
    std::vector<PropertySpec> specs;
    for (std::size_t j = 0; j < specs_per_pair; ++j) specs.push_back(random_spec(s, a, random_class(s, kind)));
    RespectReport r = respects_check({*pair}, kind, specs);
    rep.cases += r.checks;
    rep.decided += r.checks;
    rep.interesting += r.premises_true;
    if (r.refining_pairs != 1) {
      rep.violations.push_back("pair " + std::to_string(i) + ": constructed pair does not refine\n" +
                               pair_reproducer(pair->first, pair->second, kind));
    }
    for (const auto& v : r.violations) {
      rep.violations.push_back("pair " + std::to_string(i) + ": " + v + "\n" +
                               pair_reproducer(pair->first, pair->second, kind));
    }
  }
  rep.seconds = since(start);
  return rep;
}

SuiteReport canonical_reduction_suite(std::size_t samples, std::size_t horizon, std::uint64_t seed) {
  auto start = Clock::now();
  SuiteReport rep{"canonical reductions"};
  GenConfig cfg;
  cfg.seed = seed;
  Sampler s(cfg);
  const Alphabet safety_out({"bad", "ok"});
  const Alphabet cond_out({"cond", "goal", "idle"});
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t k = pick(s.rng(), 1, 3);
    Lts p = s.next(k);
    const Alphabet& a = p.alphabet();
    WordSet b = random_words(s, a, pick(s.rng(), 1, 3), 1, horizon);
    WordSet c = random_words(s, a, pick(s.rng(), 1, 2), 1, horizon);
    WordSet g = random_words(s, a, pick(s.rng(), 1, 3), 1, horizon);

    HistoryOperator hs = history_state_operator(b, "bad", "ok", horizon);
    bool reduced = satisfies(state_op(hs.interface, hs.initial, p).with_alphabet(safety_out),
                             canonical_safety(safety_out, "bad")).holds;
    bool direct = satisfies(p, PropertySpec::safety(b)).holds;
    ++rep.cases;
    ++rep.decided;
    if (!direct) ++rep.interesting;
    if (reduced != direct) {
      rep.violations.push_back("sample " + std::to_string(i) + " safety " + b.describe() + ": reduced " +
                               std::to_string(reduced) + ", direct " + std::to_string(direct) + "\n" +
                               reproducer({{"P", p}}, "ltsrefine explore P.aut --depth " + std::to_string(horizon)));
    }

    HistoryOperator hc = cond_history_state_operator(c, g, "cond", "goal", "idle", horizon);
    reduced = satisfies(state_op(hc.interface, hc.initial, p).with_alphabet(cond_out),
                        canonical_cond_liveness(cond_out, "cond", "goal")).holds;
    direct = satisfies(p, PropertySpec::cond_liveness(c, g)).holds;
    ++rep.cases;
    ++rep.decided;
    if (!direct) ++rep.interesting;
    if (reduced != direct) {
      rep.violations.push_back("sample " + std::to_string(i) + " cond-liveness C=" + c.describe() + " G=" +
                               g.describe() + ": reduced " + std::to_string(reduced) + ", direct " +
                               std::to_string(direct) + "\n" +
                               reproducer({{"P", p}}, "ltsrefine explore P.aut --depth " + std::to_string(horizon)));
    }
  }
  rep.seconds = since(start);
  return rep;
}

SuiteReport identity_suite(std::size_t samples, std::size_t depth, std::uint64_t seed) {
  auto start = Clock::now();
  SuiteReport rep{"trace identities"};
  GenConfig cfg;
  cfg.seed = seed;
  Sampler s(cfg);
  for (std::size_t i = 0; i < samples; ++i) {
    Lts p = s.next(pick(s.rng(), 1, 3));
    const Alphabet& a = p.alphabet();
    BoundedTraces b = enumerate_bounded(p, depth);
    DenotationAutomaton d = denote(p, FloodMode::none);
    ActionSet none(a.size()), all = ActionSet::full(a.size());
    ++rep.cases;
    ++rep.decided;
    if (!b.deadlocks.empty()) ++rep.interesting;
    std::string problem;
    for (const auto& w : all_words(a.size(), depth)) {
      bool dead = b.deadlocks.count(w) > 0, trace = b.partial.count(w) > 0;
      if (dead != b.is_failure(w, all)) problem = "oracle deadlocks at " + format_word(w, a);
      if (trace != (b.divergences.count(w) > 0 || b.is_failure(w, none))) problem = "oracle ptr at " + format_word(w, a);
      if (dead != query_failure(d, {w, all})) problem = "engine deadlocks at " + format_word(w, a);
      if (trace != (query_divergence(d, w) || query_failure(d, {w, none}))) problem = "engine ptr at " + format_word(w, a);
      if (!problem.empty()) break;
    }
    if (!problem.empty()) {
      rep.violations.push_back("sample " + std::to_string(i) + ": " + problem + "\n" +
                               reproducer({{"P", p}}, "ltsrefine explore P.aut --depth " + std::to_string(depth)));
    }
  }
  rep.seconds = since(start);
  return rep;
}

SuiteReport ambient_alphabet_suite(std::size_t samples, std::uint64_t seed) {
  auto start = Clock::now();
  SuiteReport rep{"ambient alphabet"};
  GenConfig cfg;
  cfg.seed = seed;
  Sampler s(cfg);
  const PreorderKind kinds[] = {PreorderKind::safety, PreorderKind::liveness, PreorderKind::cond_liveness,
                                PreorderKind::lt};
  for (std::size_t i = 0; i < samples; ++i) {
    auto [p, q] = random_pair(s, pick(s.rng(), 1, 3));
    Alphabet wide = p.alphabet().merged(Alphabet({fresh_label(p.alphabet(), "z")}));
    for (PreorderKind kind : kinds) {
      Verdict narrow = refines(p, q, kind);
      Verdict lifted = refines(p.with_alphabet(wide), q.with_alphabet(wide), kind);
      ++rep.cases;
      ++rep.decided;
      if (!narrow.holds) ++rep.interesting;
      if (narrow.holds != lifted.holds || narrow.component != lifted.component) {
        rep.violations.push_back("pair " + std::to_string(i) + " " + kind_name(kind) +
                                 ": verdict changes on the wider alphabet\n" + pair_reproducer(p, q, kind));
      }
    }
  }
  rep.seconds = since(start);
  return rep;
}

namespace {

SuiteReport fixture_suite() {
  auto start = Clock::now();
  SuiteReport rep{"reference fixtures"};
  Alphabet cg({"c", "g"}), a({"a"});
  Lts l1 = make_lts(cg, 3, {{0, "tau", 0}, {0, "c", 1}, {1, "g", 2}});
  Lts r1 = make_lts(cg, 2, {{0, "tau", 0}, {0, "c", 1}});
  Lts pl = make_lts(a, 3, {{0, "a", 1}, {1, "a", 2}, {2, "tau", 2}});
  Lts pr = make_lts(a, 4, {{0, "a", 1}, {1, "a", 2}, {2, "tau", 2}, {0, "a", 3}});

  auto expect = [&rep](bool ok, const std::string& what) {
    ++rep.cases;
    ++rep.decided;
    if (!ok) rep.violations.push_back(what);
  };
  expect(equivalent(l1, r1, PreorderKind::liveness).holds, "L1 and R1 should be liveness-equivalent");
  Verdict cond = refines(l1, r1, PreorderKind::cond_liveness);
  expect(!cond.holds && cond.witness && cond.witness->kind == Witness::Kind::failure &&
             cond.witness->trace == Word{cg.id("c")} && cond.witness->refusal == ActionSet::full(2),
         "L1 cond-liveness-refines R1 should fail with <c, {c,g}>");
  if (!cond.holds && cond.witness) expect(!separation_error(l1, r1, cond), "tester separates L1 from R1");
  Verdict live = refines(pl, pr, PreorderKind::liveness);
  expect(!live.holds && live.witness && live.witness->kind == Witness::Kind::failure &&
             live.witness->trace == Word{0} && live.witness->refusal == ActionSet::full(1),
         "PuhakkaL liveness-refines PuhakkaR should fail with <a, {a}>");
  if (!live.holds && live.witness) expect(!separation_error(pl, pr, live), "tester separates the Puhakka pair");
  expect(refines(pr, pl, PreorderKind::liveness).holds, "PuhakkaR liveness-refines PuhakkaL");
  expect(equivalent(pl, pr, PreorderKind::safety).holds, "the Puhakka pair is safety-equivalent");
  rep.interesting = rep.cases;
  rep.seconds = since(start);
  return rep;
}

}  // namespace

std::vector<SuiteReport> check_theorem_suite(std::size_t samples, std::uint64_t seed) {
  auto pairs = sample_pairs(samples, seed);
  std::vector<SuiteReport> out{preorder_chain_suite(pairs), witness_soundness_suite(pairs),
                               gadget_separation_suite(pairs), dd_suite(pairs, 5)};
  std::size_t respect_pairs = std::max<std::size_t>(1, samples / 10);
  for (PreorderKind kind :
       {PreorderKind::safety, PreorderKind::liveness, PreorderKind::cond_liveness, PreorderKind::lt}) {
    out.push_back(respects_suite(kind, respect_pairs, 10, seed + 1));
  }
  out.push_back(fixture_suite());
  out.push_back(ambient_alphabet_suite(std::max<std::size_t>(1, samples / 2), seed + 2));
  return out;
}

}  // namespace refine
