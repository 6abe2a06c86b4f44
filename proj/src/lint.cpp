#include "dtag/lint.hpp"

#include <optional>
#include <set>

namespace dtag {

namespace {

std::optional<NodeName> referenced_node(const Descriptor& d) {
  struct Get {
    std::optional<NodeName> operator()(const AtomValue&) const { return std::nullopt; }
    std::optional<NodeName> operator()(const LocalPathRef&) const { return std::nullopt; }
    std::optional<NodeName> operator()(const GlobalPathRef&) const { return std::nullopt; }
    std::optional<NodeName> operator()(const LocalNodeRef& n) const { return n.node; }
    std::optional<NodeName> operator()(const LocalNodePathRef& n) const { return n.node; }
    std::optional<NodeName> operator()(const GlobalNodeRef& n) const { return n.node; }
    std::optional<NodeName> operator()(const GlobalNodePathRef& n) const { return n.node; }
  };
  return std::visit(Get{}, d);
}

}  // namespace

std::vector<Diagnostic> lint_theory(const Theory& t, bool strict) {
  std::vector<Diagnostic> out;
  std::set<NodeName> reported_undefined;

  for (const NodeName& name : t.source_order()) {
    const auto& sentences = *t.node(name);

    bool saw_eq = false, saw_eqeq = false;
    for (const Sentence& s : sentences) {
      (s.definitional ? saw_eqeq : saw_eq) = true;
      for (const Descriptor& d : s.rvalue.items) {
        if (auto ref = referenced_node(d); ref && !t.has_node(*ref)) {
          if (reported_undefined.insert(*ref).second) {
            out.push_back({Severity::Warning, name,
                           "reference to undefined node '" + ref->str() + "'"});
          }
        }
      }
    }
    if (saw_eq && saw_eqeq) {
      out.push_back({Severity::Warning, name, "mixes '=' and '==' sentences"});
    }

    if (strict) {
      for (std::size_t i = 0; i < sentences.size(); ++i) {
        for (std::size_t j = 0; j < sentences.size(); ++j) {
          if (i == j) continue;
          const Sentence& shorter = sentences[i];
          const Sentence& longer = sentences[j];
          if (shorter.path.size() >= longer.path.size()) continue;
          if (!shorter.path.prefix_of(longer.path)) continue;
          auto a = shorter.rvalue.items.size() == 1
                       ? referenced_node(shorter.rvalue.items.front())
                       : std::nullopt;
          auto b = longer.rvalue.items.size() == 1
                       ? referenced_node(longer.rvalue.items.front())
                       : std::nullopt;
          if (a && b && *a != *b) {
            out.push_back({Severity::Notice, name,
                           "paths " + shorter.path.str() + " and " + longer.path.str() +
                               " inherit from different nodes ('" + a->str() + "' vs '" +
                               b->str() + "')"});
          }
        }
      }
    }
  }
  return out;
}

std::string diagnostic_str(const Diagnostic& d) {
  const char* tag = d.severity == Severity::Warning ? "warning" : "notice";
  return std::string(tag) + ": " + d.node.str() + ": " + d.message;
}

}  // namespace dtag
