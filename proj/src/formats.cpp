#include "refine/formats.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "refine/error.hpp"
#include "scanner.hpp"

namespace refine {

using detail::Scanner;

namespace {

struct Header {
  std::size_t initial;
  std::size_t ntrans;
  std::size_t nstates;
};

Header read_header(Scanner& in) {
  in.skip_space();
  if (!in.accept_word("des")) in.fail("expected header 'des (<initial>, <transitions>, <states>)'");
  in.expect('(');
  Header h{};
  h.initial = in.read_uint("initial state");
  in.expect(',');
  h.ntrans = in.read_uint("transition count");
  in.expect(',');
  h.nstates = in.read_uint("state count");
  in.expect(')');
  in.expect_eol();
  if (h.nstates == 0) in.fail("an LTS needs at least one state");
  if (h.initial >= h.nstates) in.fail("initial state " + std::to_string(h.initial) + " out of range");
  return h;
}

std::size_t read_state(Scanner& in, std::size_t nstates) {
  std::size_t line = in.line();
  in.skip_blank();
  std::size_t column = in.column();
  std::size_t s = in.read_uint("state index");
  if (s >= nstates) in.fail_at(line, column, "state " + std::to_string(s) + " out of range");
  return s;
}

void check_label(Scanner& in, std::size_t line, std::size_t column, const std::string& label) {
  if (!is_valid_label(label)) in.fail_at(line, column, "invalid action label '" + label + "'");
}

std::string quote(const std::string& label) { return "\"" + label + "\""; }

}  // namespace

Lts parse_lts(std::string_view text, const std::string& source) {
  Scanner in(text, source);
  Header h = read_header(in);
  std::vector<std::string> labels;
  std::vector<std::tuple<StateId, std::string, StateId>> raw;
  std::size_t count = 0;
  for (;;) {
    in.skip_space();
    if (in.at_end()) break;
    if (in.accept_word("alphabet")) {
      in.expect(':');
      while (!in.at_eol()) {
        std::size_t line = in.line(), column = in.column();
        std::string l = in.read_label("label");
        check_label(in, line, column, l);
        labels.push_back(l);
        in.accept(',');
      }
      continue;
    }
    in.expect('(');
    StateId src = static_cast<StateId>(read_state(in, h.nstates));
    in.expect(',');
    in.skip_blank();
    std::size_t line = in.line(), column = in.column();
    std::string label = in.read_label("label");
    if (label != kSilentToken) {
      check_label(in, line, column, label);
      labels.push_back(label);
    }
    in.expect(',');
    StateId dst = static_cast<StateId>(read_state(in, h.nstates));
    in.expect(')');
    in.expect_eol();
    raw.emplace_back(src, label, dst);
    ++count;
  }
  if (count != h.ntrans) {
    in.fail("header announces " + std::to_string(h.ntrans) + " transitions, found " + std::to_string(count));
  }
  Alphabet alphabet(labels);
  std::vector<Transition> ts;
  for (const auto& [s, l, t] : raw) ts.push_back({s, l == kSilentToken ? kSilent : alphabet.id(l), t});
  return Lts(alphabet, h.nstates, static_cast<StateId>(h.initial), std::move(ts));
}

std::string serialise_lts(const Lts& l) {
  std::ostringstream out;
  out << "des (" << l.initial() << ", " << l.transitions().size() << ", " << l.num_states() << ")\n";
  if (!l.alphabet().empty()) {
    out << "alphabet:";
    for (const auto& a : l.alphabet().labels()) out << ' ' << a;
    out << '\n';
  }
  for (const auto& t : l.transitions()) {
    out << '(' << t.source << ", " << quote(t.silent() ? std::string(kSilentToken) : l.alphabet().label(t.action))
        << ", " << t.target << ")\n";
  }
  return out.str();
}

std::vector<std::string> RawDfa::labels() const {
  std::set<std::string> out;
  for (const auto& e : edges) {
    if (e.label) out.insert(*e.label);
  }
  return {out.begin(), out.end()};
}

Dfa RawDfa::bind(const Alphabet& ambient) const {
  Alphabet alphabet = ambient.merged(Alphabet(labels()));
  std::vector<std::vector<AutState>> delta(num_states, std::vector<AutState>(alphabet.size(), kNoState));
  std::vector<std::optional<AutState>> wildcard(num_states);
  for (const auto& e : edges) {
    if (e.label) {
      delta[e.source][alphabet.id(*e.label)] = static_cast<AutState>(e.target);
    } else {
      wildcard[e.source] = static_cast<AutState>(e.target);
    }
  }
  for (std::size_t s = 0; s < num_states; ++s) {
    if (!wildcard[s]) continue;
    for (auto& t : delta[s]) {
      if (t == kNoState) t = *wildcard[s];
    }
  }
  std::vector<bool> acc(num_states, false);
  for (auto s : accepting) acc[s] = true;
  return Dfa(alphabet, static_cast<AutState>(initial), std::move(delta), std::move(acc));
}

RawDfa parse_dfa(std::string_view text, const std::string& source) {
  Scanner in(text, source);
  Header h = read_header(in);
  RawDfa dfa;
  dfa.initial = h.initial;
  dfa.num_states = h.nstates;
  std::set<std::pair<std::size_t, std::optional<std::string>>> seen;
  std::size_t count = 0;
  for (;;) {
    in.skip_space();
    if (in.at_end()) break;
    if (in.accept_word("accept")) {
      in.expect(':');
      while (!in.at_eol()) {
        dfa.accepting.push_back(read_state(in, h.nstates));
        in.accept(',');
      }
      continue;
    }
    in.expect('(');
    std::size_t src = read_state(in, h.nstates);
    in.expect(',');
    in.skip_blank();
    std::size_t line = in.line(), column = in.column();
    std::string label = in.read_label("label");
    std::optional<std::string> key;
    if (label != "*") {
      if (label == kSilentToken) in.fail_at(line, column, "word acceptors have no silent transitions");
      check_label(in, line, column, label);
      key = label;
    }
    if (!seen.emplace(src, key).second) {
      in.fail_at(line, column, "second edge for label '" + label + "' from state " + std::to_string(src));
    }
    in.expect(',');
    std::size_t dst = read_state(in, h.nstates);
    in.expect(')');
    in.expect_eol();
    dfa.edges.push_back({src, key, dst});
    ++count;
  }
  if (count != h.ntrans) {
    in.fail("header announces " + std::to_string(h.ntrans) + " transitions, found " + std::to_string(count));
  }
  return dfa;
}

std::string serialise_dfa(const Dfa& d) {
  std::vector<std::string> lines;
  for (AutState s = 0; s < d.size(); ++s) {
    for (ActionId a = 0; a < d.alphabet().size(); ++a) {
      AutState t = d.next(s, a);
      if (t == kNoState) continue;
      lines.push_back("(" + std::to_string(s) + ", " + quote(d.alphabet().label(a)) + ", " + std::to_string(t) + ")");
    }
  }
  std::ostringstream out;
  out << "des (" << d.initial() << ", " << lines.size() << ", " << d.size() << ")\n";
  out << "accept:";
  for (AutState s = 0; s < d.size(); ++s) {
    if (d.accepting(s)) out << ' ' << s;
  }
  out << '\n';
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

InterfaceSpec parse_interface(std::string_view text, const std::string& source) {
  Scanner in(text, source);
  in.skip_space();
  if (!in.accept_word("states")) in.fail("expected 'states:' line");
  in.expect(':');
  std::vector<std::string> states;
  while (!in.at_eol()) {
    states.push_back(in.read_token("state name"));
    in.accept(',');
  }
  if (states.empty()) in.fail("an interface needs at least one internal state");
  InterfaceSpec m(states);

  auto optional_token = [&](std::string_view what) -> std::optional<std::string> {
    std::string t = in.read_token(what);
    if (t == "*") return std::nullopt;
    return t;
  };
  for (;;) {
    in.skip_space();
    if (in.at_end()) break;
    std::size_t line = in.line(), column = in.column();
    InterfaceSpec::Key key;
    key.state = optional_token("internal state");
    in.expect(',');
    key.label = optional_token("action label");
    in.skip_blank();
    if (!(in.peek() == '-' && in.peek(1) == '>')) in.fail("expected '->'");
    in.advance();
    in.advance();
    InterfaceSpec::Outcome outcome;
    outcome.action = optional_token("emitted label");
    in.expect(',');
    outcome.next = optional_token("next internal state");
    in.expect_eol();
    if (key.label && !is_valid_label(*key.label)) in.fail_at(line, column, "invalid action label '" + *key.label + "'");
    try {
      m.add_rule(key, outcome);
    } catch (const SemanticError& e) {
      in.fail_at(line, column, e.what());
    }
  }
  return m;
}

std::string serialise_interface(const InterfaceSpec& m) {
  std::ostringstream out;
  out << "states:";
  for (const auto& s : m.states()) out << ' ' << s;
  out << '\n';
  for (const auto& [key, outcome] : m.rules()) {
    out << key.state.value_or("*") << ", " << key.label.value_or("*") << " -> " << outcome.action.value_or("*")
        << ", " << outcome.next.value_or("*") << '\n';
  }
  return out.str();
}

std::map<std::string, std::string> parse_renaming(std::string_view text, const std::string& source) {
  Scanner in(text, source);
  std::map<std::string, std::string> out;
  for (;;) {
    in.skip_space();
    if (in.at_end()) break;
    std::size_t line = in.line(), column = in.column();
    std::string from = in.read_token("label");
    in.skip_blank();
    if (!(in.peek() == '-' && in.peek(1) == '>')) in.fail("expected '->'");
    in.advance();
    in.advance();
    std::string to = in.read_token("label");
    in.expect_eol();
    check_label(in, line, column, from);
    check_label(in, line, column, to);
    auto [it, inserted] = out.emplace(from, to);
    if (!inserted && it->second != to) in.fail_at(line, column, "label '" + from + "' renamed twice");
  }
  return out;
}

std::string serialise_renaming(const std::map<std::string, std::string>& r) {
  std::ostringstream out;
  for (const auto& [from, to] : r) out << from << " -> " << to << '\n';
  return out.str();
}

namespace {

RawWordSet read_word_set(Scanner& in, const std::function<std::string(const std::string&)>& read_file) {
  RawWordSet set;
  in.skip_space();
  in.expect('{');
  in.skip_space();
  if (in.accept('@')) {
    if (!in.accept_word("dfa")) in.fail("expected '@dfa <file>'");
    std::string path = in.read_label("file name");
    std::string text;
    try {
      text = read_file(path);
    } catch (const Error& e) {
      in.fail(e.what());
    }
    set.dfa = parse_dfa(text, path);
    in.skip_space();
    in.expect('}');
    return set;
  }
  std::vector<std::string> word;
  bool pending = false;
  auto flush = [&]() {
    if (pending) set.words.push_back(word);
    word.clear();
    pending = false;
  };
  for (;;) {
    in.skip_blank();
    char c = in.peek();
    if (c == '}') {
      in.advance();
      flush();
      return set;
    }
    if (c == '\0') in.fail("unterminated word set");
    if (c == '\n' || c == ';') {
      in.advance();
      flush();
      continue;
    }
    if (c == '(') {
      in.advance();
      in.expect(')');
      if (!word.empty()) in.fail("'()' must stand alone as the empty word");
      pending = true;
      continue;
    }
    std::size_t line = in.line(), column = in.column();
    std::string label = in.read_token("label");
    check_label(in, line, column, label);
    word.push_back(label);
    pending = true;
  }
}

void collect(const RawWordSet& s, std::set<std::string>& out) {
  for (const auto& w : s.words) out.insert(w.begin(), w.end());
  if (s.dfa) {
    for (const auto& l : s.dfa->labels()) out.insert(l);
  }
}

WordSet bind_set(const RawWordSet& s, const Alphabet& alphabet) {
  if (s.dfa) return WordSet::regular(s.dfa->bind(alphabet));
  return WordSet::finite(alphabet, s.words);
}

}  // namespace

std::vector<std::string> RawProperty::labels() const {
  std::set<std::string> out;
  collect(bad, out);
  collect(condition, out);
  collect(goal, out);
  return {out.begin(), out.end()};
}

PropertySpec RawProperty::bind(const Alphabet& ambient) const {
  Alphabet alphabet = ambient.merged(Alphabet(labels()));
  switch (kind) {
    case PropertySpec::Kind::safety: return PropertySpec::safety(bind_set(bad, alphabet));
    case PropertySpec::Kind::liveness: return PropertySpec::liveness(bind_set(goal, alphabet));
    case PropertySpec::Kind::cond_liveness:
      return PropertySpec::cond_liveness(bind_set(condition, alphabet), bind_set(goal, alphabet));
  }
  throw SemanticError("unknown property kind");
}

RawProperty parse_property(std::string_view text, const std::string& source,
                           const std::function<std::string(const std::string&)>& read_file) {
  Scanner in(text, source);
  RawProperty p;
  in.skip_space();
  if (in.accept_word("safety")) {
    p.kind = PropertySpec::Kind::safety;
    p.bad = read_word_set(in, read_file);
  } else if (in.accept_word("liveness")) {
    p.kind = PropertySpec::Kind::liveness;
    p.goal = read_word_set(in, read_file);
  } else if (in.accept_word("condliveness")) {
    p.kind = PropertySpec::Kind::cond_liveness;
    in.skip_space();
    in.expect('{');
    in.skip_space();
    if (!in.accept_word("C")) in.fail("expected 'C { ... }'");
    p.condition = read_word_set(in, read_file);
    in.skip_space();
    if (!in.accept_word("G")) in.fail("expected 'G { ... }'");
    p.goal = read_word_set(in, read_file);
    in.skip_space();
    in.expect('}');
  } else {
    in.fail("expected 'safety', 'liveness' or 'condliveness'");
  }
  in.skip_space();
  if (!in.at_end()) in.fail("trailing input after the property");
  return p;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SemanticError("cannot read file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace refine
