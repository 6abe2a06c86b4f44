#include "dtag/rule_chains.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dtag {

RuleTable::RuleTable(std::vector<Rule> rules, std::vector<std::vector<Atom>> exclusive)
    : rules_(std::move(rules)), exclusive_(std::move(exclusive)) {
  for (const auto& set : exclusive_) {
    for (const Atom& r : set) {
      if (!known(r)) {
        throw std::invalid_argument("exclusion set names unknown rule '" + r.str() + "'");
      }
    }
  }
  for (const Rule& r : rules_) {
    if (r.inherits_from && !known(*r.inherits_from)) {
      throw std::invalid_argument("rule '" + r.name.str() + "' inherits from unknown rule");
    }
  }
}

const RuleTable& RuleTable::standard() {
  static const RuleTable table(
      {
          {Atom("dative"), std::nullopt},
          {Atom("passive"), std::nullopt},
          {Atom("auxinv"), std::nullopt},
          {Atom("whq"), Atom("topic")},
          {Atom("rel"), Atom("topic")},
          {Atom("topic"), std::nullopt},
      },
      {{Atom("whq"), Atom("rel"), Atom("topic")}});
  return table;
}

bool RuleTable::known(const Atom& name) const {
  return std::any_of(rules_.begin(), rules_.end(),
                     [&](const Rule& r) { return r.name == name; });
}

const RuleTable::Rule& RuleTable::find(const Atom& name) const {
  for (const Rule& r : rules_) {
    if (r.name == name) return r;
  }
  throw std::invalid_argument("unknown rule '" + name.str() + "'");
}

int RuleTable::rank(const Atom& name) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].name == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown rule '" + name.str() + "'");
}

std::vector<Atom> RuleTable::canonical(std::vector<Atom> rules) const {
  std::sort(rules.begin(), rules.end(),
            [this](const Atom& a, const Atom& b) { return rank(a) < rank(b); });
  return rules;
}

FlagReading read_alt_flags(const Theory& t, const NodeName& word, const RuleTable& table,
                           const EngineOptions& options) {
  static const Atom alt("alt");
  static const Value truthy{{Atom("true")}};
  static const Value falsy{{Atom("false")}};
  static const Value unset{{Atom("undef")}};

  FlagReading out;
  for (const RuleTable::Rule& rule : table.rules()) {
    EvalOutcome v = evaluate(t, word, Path{{alt, rule.name}}, options);
    if (!v.is_defined()) continue;
    if (v.value() == truthy) {
      out.flags.push_back(rule.name);
    } else if (!(v.value() == falsy) && !(v.value() == unset)) {
      out.issues.push_back("flag <alt " + rule.name.str() + "> at " + word.str() +
                           " has non-boolean value '" + v.value().str() + "'");
    }
  }
  return out;
}

std::string ConstraintViolation::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < clashing.size(); ++i) {
    if (i) out << ',';
    out << clashing[i].str();
  }
  return out.str();
}

std::variant<ChainSpec, ConstraintViolation> build_chain(const NodeName& word,
                                                         const std::vector<Atom>& flags,
                                                         const RuleTable& table) {
  for (const Atom& f : flags) {
    table.find(f);  // throws on unknown
  }
  std::vector<Atom> applied = table.canonical(flags);
  if (std::adjacent_find(applied.begin(), applied.end()) != applied.end()) {
    throw std::invalid_argument("duplicate rule in flag set");
  }

  for (const auto& set : table.exclusive_sets()) {
    std::vector<Atom> present;
    for (const Atom& r : applied) {
      if (std::find(set.begin(), set.end(), r) != set.end()) present.push_back(r);
    }
    if (present.size() >= 2) {
      return ConstraintViolation{std::move(present)};
    }
  }
  return ChainSpec{word, applied, derived_node_name(word, applied)};
}

NodeName derived_node_name(const NodeName& word, const std::vector<Atom>& applied) {
  std::string name = word.str() + "%";
  for (std::size_t i = 0; i < applied.size(); ++i) {
    if (i) name += "+";
    name += applied[i].str();
  }
  return NodeName::derived(std::move(name));
}

std::vector<Sentence> synthesize_glue(const ChainSpec& spec, const RuleTable& table) {
  static const Atom input("input");
  static const Atom output("output");
  static const Atom surface("surface");

  std::vector<Sentence> out;
  auto emit = [&](Path path, Descriptor d) {
    out.push_back(Sentence{spec.derived_name, std::move(path), Rvalue{{std::move(d)}}, true,
                           SourceLocation{}});
  };

  emit(Path{}, LocalNodeRef{spec.base});
  if (spec.applied.empty()) {
    emit(Path{{surface}}, LocalPathRef{Path{}});
    return out;
  }

  emit(Path{{input, spec.applied.front()}}, LocalPathRef{Path{}});
  for (std::size_t i = 0; i + 1 < spec.applied.size(); ++i) {
    emit(Path{{input, spec.applied[i + 1]}}, LocalPathRef{Path{{output, spec.applied[i]}}});
  }
  emit(Path{{surface}}, LocalPathRef{Path{{output, spec.applied.back()}}});

  // Rules defined by inheritance (whq -> topic) resolve their outputs
  // through the parent rule's input slot; alias it into the chain.
  for (const Atom& r : spec.applied) {
    const RuleTable::Rule& rule = table.find(r);
    for (auto parent = rule.inherits_from; parent;
         parent = table.find(*parent).inherits_from) {
      emit(Path{{input, *parent}}, LocalPathRef{Path{{input, r}}});
    }
  }
  return out;
}

namespace {

std::optional<TagTree> surface_tree(const Theory& t, const NodeName& node, int probe_depth,
                                    const LtagVocabulary& vocab, const EngineOptions& options) {
  static const Atom surface("surface");
  FeatureStructure fs = extract_features(t, node, Path{{surface}}, probe_depth, vocab, options);
  if (fs.empty()) return std::nullopt;
  return reconstruct_tree(fs);
}

}  // namespace

Derivation derive_word(const Theory& t, const NodeName& word, const RuleTable& table,
                       int probe_depth, const LtagVocabulary& vocab,
                       const EngineOptions& options) {
  if (!t.has_node(word)) {
    throw TheoryError("word '" + word.str() + "' is not defined");
  }

  FlagReading flags = read_alt_flags(t, word, table, options);
  auto chain = build_chain(word, flags.flags, table);

  Derivation d{t, NodeName{}, std::nullopt, std::nullopt};
  if (const auto* violation = std::get_if<ConstraintViolation>(&chain)) {
    d.violation = *violation;
    d.derived_node = derived_node_name(word, {});
    d.theory.add(Sentence{d.derived_node, Path{}, Rvalue{{LocalNodeRef{word}}}, true,
                          SourceLocation{}});
    return d;
  }

  const auto& spec = std::get<ChainSpec>(chain);
  d.derived_node = spec.derived_name;
  for (Sentence& s : synthesize_glue(spec, table)) {
    d.theory.add(std::move(s));
  }
  d.surface = surface_tree(d.theory, d.derived_node, probe_depth, vocab, options);
  return d;
}

std::vector<FamilyEntry> enumerate_family(const Theory& t, const NodeName& lexeme,
                                          const std::vector<Atom>& rules, const RuleTable& table,
                                          int probe_depth, const LtagVocabulary& vocab,
                                          const EngineOptions& options) {
  if (!t.has_node(lexeme)) {
    throw TheoryError("lexeme '" + lexeme.str() + "' is not defined");
  }
  const std::vector<Atom> pool = table.canonical(rules);

  std::vector<FamilyEntry> out;
  const std::size_t n = pool.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Atom> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(pool[i]);
    }
    auto chain = build_chain(lexeme, subset, table);
    if (std::holds_alternative<ConstraintViolation>(chain)) continue;

    const auto& spec = std::get<ChainSpec>(chain);
    Theory augmented = t;
    for (Sentence& s : synthesize_glue(spec, table)) {
      augmented.add(std::move(s));
    }
    out.push_back(FamilyEntry{
        spec.applied,
        surface_tree(augmented, spec.derived_name, probe_depth, vocab, options)});
  }

  std::sort(out.begin(), out.end(), [](const FamilyEntry& a, const FamilyEntry& b) {
    if (a.rules.size() != b.rules.size()) return a.rules.size() < b.rules.size();
    return a.rules < b.rules;
  });
  return out;
}

}  // namespace dtag
