#include <algorithm>

#include "refine/error.hpp"
#include "refine/formats.hpp"
#include "scanner.hpp"

namespace refine {

using detail::Scanner;

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::string& source) : in_(text, source) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    in_.skip_space();
    if (!in_.at_end()) in_.fail(std::string("unexpected '") + in_.peek() + "'");
    return e;
  }

 private:
  std::shared_ptr<Expr> node(Expr::Kind kind) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->source = in_.source();
    e->line = in_.line();
    e->column = in_.column();
    return e;
  }

  ExprPtr expr() {
    ExprPtr left = unary();
    for (;;) {
      in_.skip_space();
      if (!(in_.peek() == '|' && in_.peek(1) == '[')) return left;
      auto e = node(Expr::Kind::par);
      in_.advance();
      in_.advance();
      e->labels = label_list(']');
      if (in_.peek() != '|') in_.fail("expected ']|'");
      in_.advance();
      e->children = {left, unary()};
      left = e;
    }
  }

  ExprPtr unary() {
    in_.skip_space();
    if (in_.accept('(')) {
      ExprPtr inner = expr();
      in_.skip_space();
      in_.expect(')');
      return inner;
    }
    if (at_keyword("hide")) {
      auto e = node(Expr::Kind::hide);
      in_.accept_word("hide");
      in_.skip_space();
      in_.expect('{');
      e->labels = label_list('}');
      keyword("in");
      e->children = {unary()};
      return e;
    }
    if (at_keyword("state")) {
      auto e = node(Expr::Kind::state);
      in_.accept_word("state");
      e->name = name("interface name");
      in_.skip_space();
      in_.expect('@');
      in_.skip_space();
      e->state = in_.read_token("internal state");
      keyword("in");
      e->children = {unary()};
      return e;
    }
    if (at_keyword("rename")) {
      auto e = node(Expr::Kind::rename);
      in_.accept_word("rename");
      e->name = name("renaming name");
      keyword("in");
      e->children = {unary()};
      return e;
    }
    auto e = node(Expr::Kind::name);
    e->name = name("process name");
    return e;
  }

  bool at_keyword(std::string_view word) {
    in_.skip_space();
    Scanner probe = in_;
    return probe.accept_word(word);
  }

  void keyword(std::string_view word) {
    in_.skip_space();
    if (!in_.accept_word(word)) in_.fail("expected '" + std::string(word) + "'");
  }

  std::string name(std::string_view what) {
    in_.skip_space();
    if (!is_name_start(in_.peek())) in_.fail("expected " + std::string(what));
    std::size_t line = in_.line(), column = in_.column();
    std::string n = in_.read_token(what);
    for (const char* kw : {"hide", "state", "rename", "in"}) {
      if (n == kw) in_.fail_at(line, column, "'" + n + "' is a keyword");
    }
    return n;
  }

  // Labels up to the closing character, which is consumed.
  std::vector<std::string> label_list(char close) {
    std::vector<std::string> labels;
    for (;;) {
      in_.skip_space();
      if (in_.peek() == close) {
        in_.advance();
        return labels;
      }
      std::size_t line = in_.line(), column = in_.column();
      std::string l = in_.read_token("label");
      if (!is_valid_label(l)) in_.fail_at(line, column, "invalid action label '" + l + "'");
      labels.push_back(l);
      in_.skip_space();
      in_.accept(',');
    }
  }

  Scanner in_;
};

[[noreturn]] void fail_at(const Expr& e, const std::string& message) {
  throw ParseError(e.source, e.line, e.column, message);
}

void require_labels(const Expr& e, const Alphabet& alphabet) {
  for (const auto& l : e.labels) {
    if (!alphabet.contains(l)) fail_at(e, "label '" + l + "' is outside the alphabet " + format_set(ActionSet::full(alphabet.size()), alphabet));
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view text, const std::string& source) { return ExprParser(text, source).parse(); }

std::string format_expr(const Expr& e) {
  auto list = [](const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : ", ") + l;
    return out;
  };
  switch (e.kind) {
    case Expr::Kind::name: return e.name;
    case Expr::Kind::par:
      return "(" + format_expr(*e.children[0]) + " |[ " + list(e.labels) + " ]| " + format_expr(*e.children[1]) + ")";
    case Expr::Kind::hide: return "hide { " + list(e.labels) + " } in " + format_expr(*e.children[0]);
    case Expr::Kind::state: return "state " + e.name + " @ " + e.state + " in " + format_expr(*e.children[0]);
    case Expr::Kind::rename: return "rename " + e.name + " in " + format_expr(*e.children[0]);
  }
  return {};
}

Lts eval_expr(const Expr& e, Environment& env) {
  try {
    switch (e.kind) {
      case Expr::Kind::name: return env.process(e.name);
      case Expr::Kind::par: {
        Lts left = eval_expr(*e.children[0], env);
        Lts right = eval_expr(*e.children[1], env);
        Alphabet alphabet = left.alphabet().merged(right.alphabet());
        require_labels(e, alphabet);
        return par(left.with_alphabet(alphabet), e.labels, right.with_alphabet(alphabet));
      }
      case Expr::Kind::hide: {
        Lts inner = eval_expr(*e.children[0], env);
        require_labels(e, inner.alphabet());
        return hide(inner, e.labels);
      }
      case Expr::Kind::state: {
        InterfaceSpec m = env.interface(e.name);
        if (!m.has_state(e.state)) fail_at(e, "interface '" + e.name + "' has no internal state '" + e.state + "'");
        return state_op(m, e.state, eval_expr(*e.children[0], env));
      }
      case Expr::Kind::rename: {
        auto map = env.renaming(e.name);
        Lts inner = eval_expr(*e.children[0], env);
        return rename(RenamingMap(inner.alphabet(), map), inner);
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    fail_at(e, err.what());
  }
  fail_at(e, "unknown expression node");
}

Lts MapEnvironment::process(const std::string& name) {
  auto it = processes.find(name);
  if (it == processes.end()) throw SemanticError("unknown process '" + name + "'");
  return it->second;
}

InterfaceSpec MapEnvironment::interface(const std::string& name) {
  auto it = interfaces.find(name);
  if (it == interfaces.end()) throw SemanticError("unknown interface '" + name + "'");
  return it->second;
}

std::map<std::string, std::string> MapEnvironment::renaming(const std::string& name) {
  auto it = renamings.find(name);
  if (it == renamings.end()) throw SemanticError("unknown renaming '" + name + "'");
  return it->second;
}

FileEnvironment::FileEnvironment(std::vector<std::filesystem::path> dirs,
                                 std::map<std::string, std::filesystem::path> definitions)
    : dirs_(std::move(dirs)), definitions_(std::move(definitions)) {
  if (dirs_.empty()) dirs_.emplace_back(".");
}

std::optional<std::filesystem::path> FileEnvironment::locate(const std::string& name,
                                                             std::initializer_list<const char*> exts) const {
  if (auto it = definitions_.find(name); it != definitions_.end()) return it->second;
  for (const auto& dir : dirs_) {
    for (const char* ext : exts) {
      auto candidate = dir / (name + ext);
      if (std::filesystem::is_regular_file(candidate)) return candidate;
    }
  }
  return std::nullopt;
}

Lts FileEnvironment::process(const std::string& name) {
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  auto path = locate(name, {".aut", ".expr"});
  if (!path) throw SemanticError("unknown process '" + name + "' (no " + name + ".aut or " + name + ".expr)");
  if (std::find(resolving_.begin(), resolving_.end(), name) != resolving_.end()) {
    throw SemanticError("process '" + name + "' is defined in terms of itself");
  }
  resolving_.push_back(name);
  try {
    Lts l = load_process_file(*path, *this);
    resolving_.pop_back();
    return cache_.emplace(name, std::move(l)).first->second;
  } catch (...) {
    resolving_.pop_back();
    throw;
  }
}

InterfaceSpec FileEnvironment::interface(const std::string& name) {
  auto path = locate(name, {".iface"});
  if (!path) throw SemanticError("unknown interface '" + name + "' (no " + name + ".iface)");
  return parse_interface(read_text_file(*path), path->string());
}

std::map<std::string, std::string> FileEnvironment::renaming(const std::string& name) {
  auto path = locate(name, {".ren"});
  if (!path) throw SemanticError("unknown renaming '" + name + "' (no " + name + ".ren)");
  return parse_renaming(read_text_file(*path), path->string());
}

Lts load_process_file(const std::filesystem::path& path, Environment& env) {
  std::string text = read_text_file(path);
  if (path.extension() == ".expr") return eval_expr(*parse_expr(text, path.string()), env);
  return parse_lts(text, path.string());
}

}  // namespace refine
