#include "refine/constructions.hpp"

#include <algorithm>
#include <map>

#include "refine/error.hpp"

namespace refine {

std::string fresh_label(const Alphabet& alphabet, const std::string& base) {
  if (!alphabet.contains(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!alphabet.contains(candidate)) return candidate;
  }
}

Lts deterministic_tester(const Alphabet& alphabet, const std::set<Word>& words) {
  if (words.empty()) throw SemanticError("a tester needs at least one complete trace");
  // In a sorted set a word's extensions follow it directly.
  for (auto it = words.begin(); std::next(it) != words.end(); ++it) {
    const Word& w = *it;
    const Word& next = *std::next(it);
    if (next.size() > w.size() && std::equal(w.begin(), w.end(), next.begin())) {
      throw SemanticError("complete trace " + format_word(w, alphabet) + " is a proper prefix of " +
                          format_word(next, alphabet) + "; no deterministic tester has both");
    }
  }
  std::vector<Transition> ts;
  std::map<std::pair<StateId, ActionId>, StateId> child;
  StateId count = 1;
  for (const auto& w : words) {
    StateId s = 0;
    for (ActionId a : w) {
      if (a >= alphabet.size()) throw SemanticError("tester word uses an action outside the alphabet");
      auto [it, inserted] = child.emplace(std::pair{s, a}, count);
      if (inserted) {
        ts.push_back({s, a, count});
        ++count;
      }
      s = it->second;
    }
  }
  return Lts(alphabet, count, 0, std::move(ts));
}

Lts lasso_tester(const Alphabet& alphabet, const Word& u, const Word& v, ActionId g) {
  if (v.empty()) throw SemanticError("lasso cycle must be nonempty");
  const StateId len = static_cast<StateId>(u.size() + v.size());
  const StateId sink = len;
  std::vector<Transition> ts;
  for (StateId i = 0; i < len; ++i) {
    ActionId x = i < u.size() ? u[i] : v[i - u.size()];
    if (x == g) throw SemanticError("the lasso must not use the tester's own label");
    StateId next = i + 1 == len ? static_cast<StateId>(u.size()) : i + 1;
    ts.push_back({i, x, next});
    ts.push_back({i, g, sink});
  }
  return Lts(alphabet, len + 1, 0, std::move(ts));
}

namespace {

void check_distinct_labels(std::initializer_list<std::string> labels) {
  std::vector<std::string> v(labels);
  for (const auto& l : v) {
    if (!is_valid_label(l)) throw SemanticError("invalid label '" + l + "'");
  }
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw SemanticError("marker labels must be distinct");
}

void check_within_horizon(const WordSet& s, std::size_t horizon, const char* what) {
  if (s.contains(Word{})) throw SemanticError(std::string(what) + " contains the empty word (trivial property)");
  if (s.is_finite() && s.max_length() > horizon) {
    throw SemanticError(std::string(what) + " has a word longer than the horizon " + std::to_string(horizon));
  }
}

// The history interface with the action chosen by `emit` on the extended
// history.
template <typename Emit>
HistoryOperator history_operator(const Alphabet& alphabet, std::size_t horizon, const std::string& neutral,
                                 Emit emit) {
  if (horizon == 0) throw SemanticError("history horizon must be positive");
  auto histories = all_words(alphabet.size(), horizon - 1);
  std::map<Word, std::string> name;
  std::vector<std::string> states{"overflow"};
  for (std::size_t i = 0; i < histories.size(); ++i) {
    name[histories[i]] = "h" + std::to_string(i);
    states.push_back(name[histories[i]]);
  }
  HistoryOperator op{InterfaceSpec(states), name.at(Word{})};
  op.interface.add_rule({"overflow", std::nullopt}, {neutral, std::nullopt});
  for (const auto& sigma : histories) {
    for (ActionId a = 0; a < alphabet.size(); ++a) {
      Word ext = sigma;
      ext.push_back(a);
      std::string next = ext.size() < horizon ? name.at(ext) : "overflow";
      op.interface.add_rule({name.at(sigma), alphabet.label(a)}, {emit(ext), next});
    }
  }
  return op;
}

}  // namespace

HistoryOperator history_state_operator(const WordSet& b, const std::string& bad, const std::string& neutral,
                                       std::size_t horizon) {
  check_distinct_labels({bad, neutral});
  check_within_horizon(b, horizon, "B");
  return history_operator(b.alphabet(), horizon, neutral,
                          [&](const Word& w) { return b.contains(w) ? bad : neutral; });
}

HistoryOperator cond_history_state_operator(const WordSet& c, const WordSet& g, const std::string& c_label,
                                            const std::string& g_label, const std::string& neutral,
                                            std::size_t horizon) {
  check_distinct_labels({c_label, g_label, neutral});
  check_within_horizon(c, horizon, "C");
  check_within_horizon(g, horizon, "G");
  WordSet c_only = c.minus(g);
  return history_operator(g.alphabet(), horizon, neutral, [&](const Word& w) {
    if (g.contains(w)) return g_label;
    return c_only.contains(w) ? c_label : neutral;
  });
}

Lts SafetyContext::apply(const Lts& p) const {
  Lts lifted = p.with_alphabet(alphabet);
  Lts left = par(hide(lifted, hidden), ActionSet(alphabet.size()), r_sigma);
  return par(left, ActionSet::full(alphabet.size()), r_sigma_a);
}

SafetyContext safety_reduction_context(const Alphabet& alphabet, const Word& sigma, const std::string& a) {
  ActionId id = alphabet.id(a);
  Word sigma_a = sigma;
  sigma_a.push_back(id);
  ActionSet hidden = ActionSet::full(alphabet.size());
  hidden.erase(id);
  return SafetyContext{alphabet, hidden, deterministic_tester(alphabet, {sigma}),
                       deterministic_tester(alphabet, {sigma_a}), sigma_a};
}

Lts DistinguishingTest::apply(const Lts& p) const { return par(p.with_alphabet(alphabet), sync, tester); }

DistinguishingTest liveness_distinguishing_tester(const Witness& w, PreorderKind kind, const Alphabet& alphabet,
                                                  const std::string& g, const std::string& c) {
  if (alphabet.contains(g) || alphabet.contains(c)) throw SemanticError("tester labels must be fresh");
  if (kind == PreorderKind::safety) throw SemanticError("no liveness tester for the safety preorder");
  const bool bot = kind == PreorderKind::liveness;

  std::vector<std::string> labels = alphabet.labels();
  labels.push_back(g);
  if (!bot) labels.push_back(c);
  Alphabet ext(labels);
  ActionId gid = ext.id(g);
  Word sigma = translate_word(w.trace, alphabet, ext);

  DistinguishingTest test;
  test.alphabet = ext;
  test.sync = ActionSet(ext.size());
  for (const auto& l : alphabet.labels()) test.sync.insert(ext.id(l));

  auto with = [](Word base, std::initializer_list<ActionId> tail) {
    base.insert(base.end(), tail);
    return base;
  };
  std::vector<ActionId> refused;
  if (w.kind == Witness::Kind::failure) {
    for (ActionId a : w.refusal.members()) refused.push_back(ext.id(alphabet.label(a)));
  }

  if (bot) {
    // ct(r) = {ρg | ρ ≤ σ} for a divergence, {ρg | ρ < σ} ∪ {σa | a ∈ X}
    // for a failure; the property asks for a prefix in G.
    switch (w.kind) {
      case Witness::Kind::divergence: {
        std::set<Word> words;
        for (std::size_t k = 0; k <= sigma.size(); ++k) words.insert(with(Word(sigma.begin(), sigma.begin() + k), {gid}));
        test.tester = deterministic_tester(ext, words);
        test.property = canonical_liveness(ext, g);
        return test;
      }
      case Witness::Kind::failure: {
        std::set<Word> goal;
        for (std::size_t k = 0; k < sigma.size(); ++k) goal.insert(with(Word(sigma.begin(), sigma.begin() + k), {gid}));
        for (ActionId a : refused) goal.insert(with(sigma, {a}));
        std::set<Word> words = goal;
        if (refused.empty()) words.insert(sigma);
        test.tester = deterministic_tester(ext, words);
        test.property = PropertySpec::liveness(WordSet::finite(ext, goal));
        return test;
      }
      case Witness::Kind::infinite_lasso:
        test.tester = lasso_tester(ext, sigma, translate_word(w.cycle, alphabet, ext), gid);
        test.property = canonical_liveness(ext, g);
        return test;
      case Witness::Kind::trace:
        break;
    }
    throw SemanticError("a trace witness has no liveness tester");
  }

  ActionId cid = ext.id(c);
  switch (w.kind) {
    case Witness::Kind::divergence:
      test.tester = deterministic_tester(ext, {with(sigma, {cid, gid})});
      test.property = canonical_cond_liveness(ext, c, g);
      return test;
    case Witness::Kind::failure: {
      std::set<Word> goal;
      for (ActionId a : refused) goal.insert(with(sigma, {cid, a}));
      std::set<Word> words = goal;
      if (refused.empty()) words.insert(with(sigma, {cid}));
      test.tester = deterministic_tester(ext, words);
      test.property = PropertySpec::cond_liveness(WordSet::containing(ext, c), WordSet::finite(ext, goal));
      return test;
    }
    case Witness::Kind::infinite_lasso:
    case Witness::Kind::trace:
      break;
  }
  throw SemanticError("unsupported witness shape for a conditional liveness tester: " +
                      std::string(to_string(w.kind)));
}

}  // namespace refine
