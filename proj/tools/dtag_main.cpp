// dtag: check, query, trace and view default-inheritance lexicons with an
// LTAG tree layer. Theories are .dtr files; commands take the theory
// files first, then their own arguments.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtag/engine.hpp"
#include "dtag/lint.hpp"
#include "dtag/parser.hpp"
#include "dtag/printer.hpp"
#include "dtag/render.hpp"
#include "dtag/rule_chains.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;      // parse/usage errors
constexpr int kExitUndefined = 2;  // undefined value / surface
constexpr int kExitTreeError = 3;  // reconstruction failures

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Leading arguments that name existing files are the theory list; the
// rest belong to the command.
std::pair<std::vector<std::string>, std::vector<std::string>> split_files(
    const std::vector<std::string>& args) {
  std::vector<std::string> files, rest;
  std::size_t i = 0;
  while (i < args.size() && std::filesystem::exists(args[i])) {
    files.push_back(args[i++]);
  }
  for (; i < args.size(); ++i) rest.push_back(args[i]);
  if (files.empty()) {
    throw Usage("no theory files given (or the first argument names a missing file)");
  }
  return {std::move(files), std::move(rest)};
}

dtag::Path path_from(const std::vector<std::string>& atoms, std::size_t from) {
  std::vector<dtag::Atom> attrs;
  for (std::size_t i = from; i < atoms.size(); ++i) {
    if (!dtag::Atom::valid(atoms[i])) {
      throw Usage("'" + atoms[i] + "' is not a valid path atom");
    }
    attrs.emplace_back(atoms[i]);
  }
  return dtag::Path(std::move(attrs));
}

dtag::Path path_from_spaced(const std::string& spec) {
  std::istringstream in(spec);
  std::vector<std::string> atoms;
  std::string a;
  while (in >> a) atoms.push_back(a);
  return path_from(atoms, 0);
}

dtag::NodeName node_from(const std::vector<std::string>& args, std::size_t i,
                         const char* what) {
  if (i >= args.size()) {
    throw Usage(std::string("missing ") + what);
  }
  if (!dtag::NodeName::valid(args[i])) {
    throw Usage("'" + args[i] + "' is not a valid node name");
  }
  return dtag::NodeName(args[i]);
}

int default_probe_depth() {
  if (const char* env = std::getenv("DTAG_PROBE_DEPTH")) {
    try {
      const int d = std::stoi(env);
      if (d >= 1) return d;
    } catch (...) {
    }
    std::cerr << "dtag: ignoring invalid DTAG_PROBE_DEPTH='" << env << "'\n";
  }
  return 16;
}

dtag::TreeFormat format_from(const std::string& name) {
  auto f = dtag::tree_format_from(name);
  if (!f) throw Usage("unknown format '" + name + "' (bracket, dot, json)");
  return *f;
}

int cmd_check(const std::vector<std::string>& args, bool strict, bool print_canonical) {
  auto [files, rest] = split_files(args);
  if (!rest.empty()) throw Usage("check takes only theory files");
  dtag::Theory t = dtag::load_theory(files);

  bool warned = false;
  for (const dtag::Diagnostic& d : dtag::lint_theory(t, strict)) {
    std::cerr << dtag::diagnostic_str(d) << '\n';
    warned |= d.severity == dtag::Severity::Warning;
  }
  if (print_canonical) std::cout << dtag::canonical_print(t);
  return (strict && warned) ? kExitError : kExitOk;
}

int cmd_query(const std::vector<std::string>& args, bool traced) {
  auto [files, rest] = split_files(args);
  dtag::Theory t = dtag::load_theory(files);
  const dtag::NodeName node = node_from(rest, 0, "query node");
  const dtag::Path path = path_from(rest, 1);

  if (traced) {
    auto [outcome, steps] = dtag::evaluate_traced(t, node, path);
    for (const dtag::TraceStep& s : steps) std::cout << s.str() << '\n';
    std::cout << "= " << outcome.str() << '\n';
    return outcome.is_defined() ? kExitOk : kExitUndefined;
  }
  dtag::EvalOutcome outcome = dtag::evaluate(t, node, path);
  std::cout << outcome.str() << '\n';
  return outcome.is_defined() ? kExitOk : kExitUndefined;
}

int cmd_tree(const std::vector<std::string>& args, const std::string& prefix,
             const std::string& format, int depth, bool unicode) {
  auto [files, rest] = split_files(args);
  dtag::Theory t = dtag::load_theory(files);
  const dtag::NodeName node = node_from(rest, 0, "tree node");
  if (rest.size() > 1) throw Usage("unexpected arguments after the node name");

  dtag::FeatureStructure fs = dtag::extract_features(t, node, path_from_spaced(prefix), depth);
  if (fs.empty()) {
    throw dtag::TreeError("no features defined", dtag::Path{});
  }
  dtag::TagTree tree = dtag::reconstruct_tree(fs);
  std::cout << dtag::render(tree, format_from(format), {unicode}) << '\n';
  return kExitOk;
}

int cmd_derive(const std::vector<std::string>& args, const std::string& format, int depth,
               bool unicode) {
  auto [files, rest] = split_files(args);
  dtag::Theory t = dtag::load_theory(files);
  const dtag::NodeName word = node_from(rest, 0, "word");
  if (rest.size() > 1) throw Usage("unexpected arguments after the word");

  dtag::Derivation d = dtag::derive_word(t, word, dtag::RuleTable::standard(), depth);
  if (d.violation) {
    std::cout << "UNDEFINED(constraint: " << d.violation->str() << ")\n";
    return kExitUndefined;
  }
  if (!d.surface) {
    std::cout << "UNDEFINED(no-surface)\n";
    return kExitUndefined;
  }
  std::cout << dtag::render(*d.surface, format_from(format), {unicode}) << '\n';
  return kExitOk;
}

int cmd_family(const std::vector<std::string>& args, const std::string& rules_csv, int depth,
               bool unicode) {
  auto [files, rest] = split_files(args);
  dtag::Theory t = dtag::load_theory(files);
  const dtag::NodeName lexeme = node_from(rest, 0, "lexeme");
  if (rest.size() > 1) throw Usage("unexpected arguments after the lexeme");

  std::vector<dtag::Atom> rules;
  std::istringstream in(rules_csv);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    if (!dtag::Atom::valid(name)) throw Usage("'" + name + "' is not a valid rule name");
    rules.emplace_back(name);
  }

  for (const dtag::FamilyEntry& e : dtag::enumerate_family(t, lexeme, rules,
                                                           dtag::RuleTable::standard(), depth)) {
    for (std::size_t i = 0; i < e.rules.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << e.rules[i].str();
    }
    std::cout << '\t';
    if (e.tree) {
      std::cout << dtag::render(*e.tree, dtag::TreeFormat::Bracket, {unicode});
    } else {
      std::cout << "UNDEFINED";
    }
    std::cout << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"default-inheritance lexicon tools"};
  app.require_subcommand(1);

  std::vector<std::string> args;
  bool strict = false;
  bool print_canonical = false;
  bool unicode = false;
  std::string format = "bracket";
  std::string prefix;
  std::string rules_csv;
  int depth = default_probe_depth();

  auto* check = app.add_subcommand("check", "parse and lint theory files");
  check->add_option("args", args, "theory files")->required();
  check->add_flag("--strict", strict, "promote warnings to errors and enable notices");
  check->add_flag("--print", print_canonical, "print the canonical form");

  auto* query = app.add_subcommand("query", "evaluate a node/path query");
  query->add_option("args", args, "theory files, node, path atoms")->required();

  auto* trace = app.add_subcommand("trace", "evaluate and print the inheritance chain");
  trace->add_option("args", args, "theory files, node, path atoms")->required();

  auto* tree = app.add_subcommand("tree", "reconstruct and render an elementary tree");
  tree->add_option("args", args, "theory files, node")->required();
  tree->add_option("--prefix", prefix, "feature prefix, space-separated atoms");
  tree->add_option("--format", format, "bracket, dot or json")->capture_default_str();
  tree->add_option("--depth", depth, "probe depth")->capture_default_str();
  tree->add_flag("--unicode", unicode, "unicode tree markers");

  auto* derive = app.add_subcommand("derive", "apply a word's flagged lexical rules");
  derive->add_option("args", args, "theory files, word")->required();
  derive->add_option("--format", format, "bracket, dot or json")->capture_default_str();
  derive->add_option("--depth", depth, "probe depth")->capture_default_str();
  derive->add_flag("--unicode", unicode, "unicode tree markers");

  auto* family = app.add_subcommand("family", "derive every rule subset for a lexeme");
  family->add_option("args", args, "theory files, lexeme")->required();
  family->add_option("--rules", rules_csv, "comma-joined rule names");
  family->add_option("--depth", depth, "probe depth")->capture_default_str();
  family->add_flag("--unicode", unicode, "unicode tree markers");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(args, strict, print_canonical);
    if (query->parsed()) return cmd_query(args, false);
    if (trace->parsed()) return cmd_query(args, true);
    if (tree->parsed()) return cmd_tree(args, prefix, format, depth, unicode);
    if (derive->parsed()) return cmd_derive(args, format, depth, unicode);
    if (family->parsed()) return cmd_family(args, rules_csv, depth, unicode);
  } catch (const dtag::TreeError& e) {
    std::cerr << "dtag: " << e.what() << '\n';
    return kExitTreeError;
  } catch (const dtag::ProbeError& e) {
    std::cerr << "dtag: " << e.what() << '\n';
    return kExitTreeError;
  } catch (const Usage& e) {
    std::cerr << "dtag: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "dtag: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
