#include "dtag/render.hpp"

#include <sstream>

#include <json.hpp>

namespace dtag {

std::optional<TreeFormat> tree_format_from(const std::string& name) {
  if (name == "bracket") return TreeFormat::Bracket;
  if (name == "dot") return TreeFormat::Dot;
  if (name == "json") return TreeFormat::Json;
  return std::nullopt;
}

namespace {

const char* marker(NodeType t, bool unicode) {
  switch (t) {
    case NodeType::Anchor: return unicode ? "⋄" : "^";
    case NodeType::Substitution: return unicode ? "↓" : "!";
    case NodeType::Foot: return "*";
    case NodeType::Internal: return "";
  }
  return "";
}

void bracket(const TagTree& t, bool unicode, std::ostream& out) {
  out << '(' << t.cat.str() << marker(t.node_type, unicode);
  if (t.root) out << ' ' << t.root->str();
  for (const TagTree& c : t.children) {
    out << ' ';
    bracket(c, unicode, out);
  }
  out << ')';
}

int dot_node(const TagTree& t, int& next_id, std::ostream& out) {
  const int id = next_id++;
  std::string label = t.cat.str();
  if (t.form) label += "/" + t.form->str();
  if (t.root) label += "\\n" + t.root->str();
  out << "  n" << id << " [label=\"" << label << "\"";
  if (t.node_type == NodeType::Anchor) out << ", peripheries=2";
  out << "];\n";
  for (const TagTree& c : t.children) {
    const int child_id = dot_node(c, next_id, out);
    out << "  n" << id << " -> n" << child_id << ";\n";
  }
  return id;
}

nlohmann::json to_json(const TagTree& t) {
  nlohmann::json j;  // object keys serialize sorted
  j["cat"] = t.cat.str();
  j["type"] = node_type_str(t.node_type);
  if (t.root) j["root"] = t.root->str();
  if (t.form) j["form"] = t.form->str();
  if (!t.children.empty()) {
    auto arr = nlohmann::json::array();
    for (const TagTree& c : t.children) arr.push_back(to_json(c));
    j["children"] = std::move(arr);
  }
  return j;
}

}  // namespace

std::string render(const TagTree& tree, TreeFormat format, const RenderOptions& options) {
  std::ostringstream out;
  switch (format) {
    case TreeFormat::Bracket:
      bracket(tree, options.unicode, out);
      break;
    case TreeFormat::Dot: {
      out << "digraph tagtree {\n  node [shape=ellipse];\n";
      int next_id = 0;
      dot_node(tree, next_id, out);
      out << "}\n";
      break;
    }
    case TreeFormat::Json:
      out << to_json(tree).dump(2);
      break;
  }
  return out.str();
}

}  // namespace dtag
