#ifndef DTAG_RULE_CHAINS_HPP_
#define DTAG_RULE_CHAINS_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dtag/tag_tree.hpp"
#include "dtag/theory.hpp"

namespace dtag {

/// The known lexical rules: canonical application order, exclusion sets,
/// and rule-over-rule inheritance (whq and rel ride on topic, so chain
/// glue must alias the inherited rule's input slot).
class RuleTable {
 public:
  struct Rule {
    Atom name;
    std::optional<Atom> inherits_from;
  };

  RuleTable(std::vector<Rule> rules, std::vector<std::vector<Atom>> exclusive);

  /// dative < passive < auxinv < whq < rel < topic;
  /// {whq, rel, topic} mutually exclusive; whq, rel inherit topic.
  static const RuleTable& standard();

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::vector<Atom>>& exclusive_sets() const { return exclusive_; }

  bool known(const Atom& name) const;
  const Rule& find(const Atom& name) const;  // throws on unknown
  int rank(const Atom& name) const;
  /// Sorts (a copy of) the given rules into canonical order.
  std::vector<Atom> canonical(std::vector<Atom> rules) const;

 private:
  std::vector<Rule> rules_;
  std::vector<std::vector<Atom>> exclusive_;
};

struct FlagReading {
  std::vector<Atom> flags;          // canonical order
  std::vector<std::string> issues;  // alt values outside {true, false, undef}
};

/// Collects every rule r with evaluate(t, word, <alt r>) = true. An
/// unset flag reads as the atom `undef` through the hierarchy default
/// and counts as false; any other non-boolean value is reported.
FlagReading read_alt_flags(const Theory& t, const NodeName& word, const RuleTable& table,
                           const EngineOptions& options = {});

struct ChainSpec {
  NodeName base;
  std::vector<Atom> applied;  // canonical order, duplicate-free
  NodeName derived_name;
};

struct ConstraintViolation {
  std::vector<Atom> clashing;  // canonical order

  std::string str() const;  // "whq,topic"
};

/// Orders the flagged rules and checks the exclusion sets. On violation
/// the clashing rules are reported and the word gets no surface
/// structure. Throws std::invalid_argument on an unknown rule name.
std::variant<ChainSpec, ConstraintViolation> build_chain(const NodeName& word,
                                                         const std::vector<Atom>& flags,
                                                         const RuleTable& table);

/// Derived node name: word%rule1+rule2... ('%' is unlexable, so the name
/// cannot collide with source-level nodes).
NodeName derived_node_name(const NodeName& word, const std::vector<Atom>& applied);

/// The inheritance glue for a chain, at spec.derived_name:
///   <> == base
///   <input r1> == <>
///   <input r_{i+1}> == <output r_i>
///   <surface> == <output r_k>
/// plus, for each applied rule that inherits from another rule, an alias
/// binding the inherited rule's input to the applying rule's input
/// (e.g. <input topic> == <input whq>). An empty chain yields
/// <> == base and <surface> == <>.
std::vector<Sentence> synthesize_glue(const ChainSpec& spec, const RuleTable& table);

struct Derivation {
  Theory theory;  // input theory plus the glue node
  NodeName derived_node;
  std::optional<TagTree> surface;  // absent on violation or when nothing materializes
  std::optional<ConstraintViolation> violation;
};

/// Reads the word's alt flags, synthesizes the chain glue under a fresh
/// derived node, and reconstructs the tree at <surface>. On a constraint
/// violation the derivation carries the violation and no surface tree.
/// Throws TheoryError if the word is not defined.
Derivation derive_word(const Theory& t, const NodeName& word,
                       const RuleTable& table = RuleTable::standard(), int probe_depth = 16,
                       const LtagVocabulary& vocab = LtagVocabulary::standard(),
                       const EngineOptions& options = {});

struct FamilyEntry {
  std::vector<Atom> rules;  // canonical order
  std::optional<TagTree> tree;
};

/// Derives the surface tree for every subset of `rules` that passes the
/// constraint table (violating subsets are omitted). Subsets whose rules
/// produce no structure at this lexeme map to an absent tree. Output is
/// sorted by subset size, then lexicographically.
std::vector<FamilyEntry> enumerate_family(const Theory& t, const NodeName& lexeme,
                                          const std::vector<Atom>& rules,
                                          const RuleTable& table = RuleTable::standard(),
                                          int probe_depth = 16,
                                          const LtagVocabulary& vocab = LtagVocabulary::standard(),
                                          const EngineOptions& options = {});

}  // namespace dtag

#endif  // DTAG_RULE_CHAINS_HPP_
