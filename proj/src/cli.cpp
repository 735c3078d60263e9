#include "refine/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "refine/denotation.hpp"
#include "refine/error.hpp"
#include "refine/formats.hpp"
#include "refine/preorders.hpp"
#include "refine/properties.hpp"

namespace refine {

namespace {

struct Options {
  std::vector<std::string> dirs;
  std::vector<std::string> defs;
};

FileEnvironment make_environment(const Options& opts) {
  std::vector<std::filesystem::path> dirs(opts.dirs.begin(), opts.dirs.end());
  std::map<std::string, std::filesystem::path> defs;
  for (const auto& d : opts.defs) {
    auto eq = d.find('=');
    if (eq == std::string::npos || eq == 0) throw SemanticError("--def expects NAME=FILE, got '" + d + "'");
    defs[d.substr(0, eq)] = d.substr(eq + 1);
  }
  return FileEnvironment(std::move(dirs), std::move(defs));
}

// An argument is a file (LTS, or expression by `.expr`) if one exists by that
// name, and expression text otherwise.
Lts resolve(const std::string& arg, Environment& env) {
  std::filesystem::path path(arg);
  if (std::filesystem::is_regular_file(path)) return load_process_file(path, env);
  return eval_expr(*parse_expr(arg, "<argument '" + arg + "'>"), env);
}

void print_set(std::ostream& out, const char* key, const std::set<Word>& words, const Alphabet& alphabet) {
  out << key << ":";
  bool first = true;
  for (const auto& w : words) {
    out << (first ? " " : " | ") << format_word(w, alphabet);
    first = false;
  }
  out << '\n';
}

int run_check(const std::string& left, const std::string& right, const std::string& preorder, bool witness, bool both,
              const Options& opts, std::ostream& out) {
  auto env = make_environment(opts);
  PreorderKind kind = parse_preorder_kind(preorder);
  Lts p = resolve(left, env);
  Lts q = resolve(right, env);
  Alphabet alphabet = p.alphabet().merged(q.alphabet());
  p = p.with_alphabet(alphabet);
  q = q.with_alphabet(alphabet);
  Verdict v = both ? equivalent(p, q, kind) : refines(p, q, kind);
  out << "left: " << left << '\n';
  out << "right: " << right << '\n';
  out << "relation: " << (both ? "equivalence" : "refinement") << '\n';
  out << "alphabet: " << format_set(ActionSet::full(alphabet.size()), alphabet) << '\n';
  out << format_verdict(v, alphabet, witness);
  return v.holds ? 0 : 1;
}

int run_prop(const std::string& process, const std::string& prop_file, const Options& opts, std::ostream& out) {
  auto env = make_environment(opts);
  Lts p = resolve(process, env);
  std::filesystem::path prop_path(prop_file);
  auto base = prop_path.parent_path();
  RawProperty raw = parse_property(read_text_file(prop_path), prop_file, [&](const std::string& rel) {
    std::filesystem::path path(rel);
    return read_text_file(path.is_absolute() ? path : base / path);
  });
  PropertySpec spec = raw.bind(p.alphabet());
  PropertyVerdict v = satisfies(p, spec);
  const Alphabet& alphabet = spec.alphabet();
  out << "process: " << process << '\n';
  out << "property: " << to_string(spec.kind) << '\n';
  out << "alphabet: " << format_set(ActionSet::full(alphabet.size()), alphabet) << '\n';
  out << "verdict: " << (v.holds ? "satisfied" : "violated") << '\n';
  if (!v.holds) {
    out << "violation: " << to_string(v.violation) << '\n';
    out << "witness-trace: " << format_word(v.trace, alphabet) << '\n';
    if (v.violation == PropertyVerdict::Violation::infinite) {
      out << "witness-cycle: " << format_word(v.cycle, alphabet) << '\n';
    }
  }
  return v.holds ? 0 : 1;
}

int run_compose(const std::string& expr, const std::string& out_file, const Options& opts, std::ostream& out) {
  auto env = make_environment(opts);
  Lts l = resolve(expr, env).reachable_part();
  std::string text = serialise_lts(l);
  if (out_file.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(out_file, std::ios::binary);
  if (!file || !(file << text)) throw SemanticError("cannot write '" + out_file + "'");
  out << "output: " << out_file << '\n';
  out << "states: " << l.num_states() << '\n';
  out << "transitions: " << l.transitions().size() << '\n';
  return 0;
}

int run_explore(const std::string& expr, std::size_t depth, const std::string& dump, const Options& opts,
                std::ostream& out) {
  auto env = make_environment(opts);
  Lts l = resolve(expr, env);
  const Alphabet& alphabet = l.alphabet();
  BoundedTraces b = enumerate_bounded(l, depth);
  out << "states: " << l.num_states() << '\n';
  out << "transitions: " << l.transitions().size() << '\n';
  out << "alphabet: " << format_set(ActionSet::full(alphabet.size()), alphabet) << '\n';
  out << "deterministic: " << (is_deterministic(l) ? "yes" : "no") << '\n';
  out << "depth: " << depth << '\n';
  print_set(out, "ptr", b.partial, alphabet);
  print_set(out, "deadlocks", b.deadlocks, alphabet);
  print_set(out, "divergences", b.divergences, alphabet);
  print_set(out, "complete", b.complete, alphabet);
  if (!dump.empty()) out << denote(l, parse_flood_mode(dump)).dump();
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Refinement checking for finite labelled transition systems", "ltsrefine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("-d,--dir", opts.dirs, "Directory searched for NAME.aut, NAME.expr, NAME.iface, NAME.ren");
  app.add_option("--def", opts.defs, "Bind NAME to FILE (NAME=FILE)");

  std::string left, right, preorder = "liveness";
  bool witness = false, both = false;
  auto* check = app.add_subcommand("check", "Decide a preorder between two processes");
  check->add_option("left", left, "Left process (file, name or expression)")->required();
  check->add_option("right", right, "Right process (file, name or expression)")->required();
  check->add_option("--preorder", preorder, "safety | liveness | cond-liveness | lt")->capture_default_str();
  check->add_flag("--witness", witness, "Print the counterexample");
  check->add_flag("--both", both, "Check equivalence (both directions)");

  std::string process, prop_file;
  auto* prop = app.add_subcommand("prop", "Check a safety, liveness or conditional liveness property");
  prop->add_option("process", process, "Process (file, name or expression)")->required();
  prop->add_option("property", prop_file, "Property file")->required();

  std::string expr, out_file;
  auto* compose = app.add_subcommand("compose", "Evaluate an expression and write the LTS");
  compose->add_option("expr", expr, "Process (file, name or expression)")->required();
  compose->add_option("-o,--out", out_file, "Output .aut file (default: standard output)");

  std::size_t depth = 3;
  std::string dump;
  auto* explore = app.add_subcommand("explore", "Print bounded trace sets");
  explore->add_option("expr", expr, "Process (file, name or expression)")->required();
  explore->add_option("--depth", depth, "Maximal word length")->capture_default_str();
  explore->add_option("--dump", dump, "Also dump the denotation automaton (none | bot | d)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(left, right, preorder, witness, both, opts, out);
    if (*prop) return run_prop(process, prop_file, opts, out);
    if (*compose) return run_compose(expr, out_file, opts, out);
    if (*explore) return run_explore(expr, depth, dump, opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace refine
