#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "refine/automata.hpp"
#include "refine/lts.hpp"
#include "refine/operators.hpp"
#include "refine/properties.hpp"

namespace refine {

// ---- LTS files (Aldebaran) ------------------------------------------------
//
//   des (<initial>, <ntrans>, <nstates>)
//   alphabet: a b c            optional; adds labels to the declared alphabet
//   (0, "a", 1)                label quoted or bare; "tau" is the silent action

Lts parse_lts(std::string_view text, const std::string& source = "<lts>");
std::string serialise_lts(const Lts& l);

// ---- DFA files --------------------------------------------------------------
//
// The Aldebaran layout plus an `accept: <states>` line. The label `*` stands
// for every label of the ambient alphabet without an explicit edge from the
// same state. Missing edges reject.

struct RawDfa {
  struct Edge {
    std::size_t source;
    std::optional<std::string> label;  // nullopt: wildcard
    std::size_t target;
  };
  std::size_t initial = 0;
  std::size_t num_states = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> accepting;

  /// Labels named explicitly.
  std::vector<std::string> labels() const;
  /// The acceptor over ambient ∪ labels().
  Dfa bind(const Alphabet& ambient) const;
};

RawDfa parse_dfa(std::string_view text, const std::string& source = "<dfa>");
std::string serialise_dfa(const Dfa& d);

// ---- Interface files --------------------------------------------------------
//
//   states: s0 s1
//   s0, a -> a1, s1            action(s0,a) = a1, effect(s0,a) = s1
//   *, b -> *, s0              `*` on the left: any; on the right: keep/stay

InterfaceSpec parse_interface(std::string_view text, const std::string& source = "<interface>");
std::string serialise_interface(const InterfaceSpec& m);

// ---- Renaming files ---------------------------------------------------------
//
//   a -> b                     one pair per line; unlisted labels are fixed

std::map<std::string, std::string> parse_renaming(std::string_view text, const std::string& source = "<renaming>");
std::string serialise_renaming(const std::map<std::string, std::string>& r);

// ---- Property files ---------------------------------------------------------
//
//   safety { a b ; c }         one word per line or per `;`; `()` is ε
//   liveness { @dfa goal.dfa }
//   condliveness { C { c } G { c g } }

struct RawWordSet {
  std::vector<std::vector<std::string>> words;
  std::optional<RawDfa> dfa;
};

struct RawProperty {
  PropertySpec::Kind kind = PropertySpec::Kind::safety;
  RawWordSet bad;
  RawWordSet condition;
  RawWordSet goal;

  std::vector<std::string> labels() const;
  /// The property over ambient ∪ labels().
  PropertySpec bind(const Alphabet& ambient) const;
};

/// `read_file` resolves the path of an `@dfa` reference to its contents.
RawProperty parse_property(std::string_view text, const std::string& source,
                           const std::function<std::string(const std::string&)>& read_file);

// ---- Process expressions ----------------------------------------------------
//
//   expr  ::= unary ( "|[" labels "]|" unary )*          left-associative
//   unary ::= NAME | "(" expr ")"
//           | "hide" "{" labels "}" "in" unary
//           | "state" NAME "@" STATE "in" unary
//           | "rename" NAME "in" unary
//   labels ::= label ( ","? label )*   (possibly empty)

struct Expr {
  enum class Kind { name, par, hide, state, rename };

  Kind kind = Kind::name;
  std::string name;                  // process, interface or renaming name
  std::string state;                 // initial internal state (state)
  std::vector<std::string> labels;   // sync set (par) or hidden set (hide)
  std::vector<std::shared_ptr<const Expr>> children;
  std::string source;
  std::size_t line = 0;
  std::size_t column = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view text, const std::string& source = "<expr>");
std::string format_expr(const Expr& e);

/// Name resolution for expressions.
class Environment {
 public:
  virtual ~Environment() = default;
  virtual Lts process(const std::string& name) = 0;
  virtual InterfaceSpec interface(const std::string& name) = 0;
  virtual std::map<std::string, std::string> renaming(const std::string& name) = 0;
};

/// In-memory definitions.
class MapEnvironment : public Environment {
 public:
  std::map<std::string, Lts> processes;
  std::map<std::string, InterfaceSpec> interfaces;
  std::map<std::string, std::map<std::string, std::string>> renamings;

  Lts process(const std::string& name) override;
  InterfaceSpec interface(const std::string& name) override;
  std::map<std::string, std::string> renaming(const std::string& name) override;
};

/// Resolves NAME through explicit definitions first, then as
/// DIR/NAME.aut (or DIR/NAME.expr), DIR/NAME.iface and DIR/NAME.ren in each
/// search directory in order.
class FileEnvironment : public Environment {
 public:
  explicit FileEnvironment(std::vector<std::filesystem::path> dirs,
                           std::map<std::string, std::filesystem::path> definitions = {});

  Lts process(const std::string& name) override;
  InterfaceSpec interface(const std::string& name) override;
  std::map<std::string, std::string> renaming(const std::string& name) override;

 private:
  std::optional<std::filesystem::path> locate(const std::string& name, std::initializer_list<const char*> exts) const;

  std::vector<std::filesystem::path> dirs_;
  std::map<std::string, std::filesystem::path> definitions_;
  std::map<std::string, Lts> cache_;
  std::vector<std::string> resolving_;
};

/// Evaluates via the operators module. Operand alphabets of a parallel
/// composition are extended to their union. Errors carry the position of
/// the offending subexpression.
Lts eval_expr(const Expr& e, Environment& env);

std::string read_text_file(const std::filesystem::path& path);
/// Loads an LTS file, or evaluates an expression file (by extension
/// `.expr`) against `env`.
Lts load_process_file(const std::filesystem::path& path, Environment& env);

}  // namespace refine
