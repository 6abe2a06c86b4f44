#include "dtag/theory.hpp"

#include <sstream>

namespace dtag {

std::string descriptor_str(const Descriptor& d) {
  struct Printer {
    std::string operator()(const AtomValue& a) const { return a.value.str(); }
    std::string operator()(const LocalPathRef& p) const { return p.path.str(); }
    std::string operator()(const LocalNodeRef& n) const { return n.node.str(); }
    std::string operator()(const LocalNodePathRef& np) const {
      return np.node.str() + ":" + np.path.str();
    }
    std::string operator()(const GlobalPathRef& p) const { return "\"" + p.path.str() + "\""; }
    std::string operator()(const GlobalNodeRef& n) const { return "\"" + n.node.str() + "\""; }
    std::string operator()(const GlobalNodePathRef& np) const {
      return "\"" + np.node.str() + ":" + np.path.str() + "\"";
    }
  };
  return std::visit(Printer{}, d);
}

std::string Rvalue::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << ' ';
    out << descriptor_str(items[i]);
  }
  return out.str();
}

void Theory::add(Sentence s) {
  auto [it, inserted] = nodes_.try_emplace(s.node);
  if (inserted) source_order_.push_back(s.node);
  for (const Sentence& existing : it->second) {
    if (existing.path == s.path) {
      throw TheoryError("duplicate path " + s.path.str() + " at node " + s.node.str());
    }
  }
  it->second.push_back(std::move(s));
}

void Theory::merge(const Theory& other) {
  for (const NodeName& n : other.source_order_) {
    for (const Sentence& s : *other.node(n)) {
      add(s);
    }
  }
}

const std::vector<Sentence>* Theory::node(const NodeName& n) const {
  auto it = nodes_.find(n);
  return it == nodes_.end() ? nullptr : &it->second;
}

const Sentence* Theory::longest_prefix(const NodeName& node, const Path& query) const {
  const auto* sentences = this->node(node);
  if (!sentences) return nullptr;
  const Sentence* best = nullptr;
  for (const Sentence& s : *sentences) {
    if (s.path.prefix_of(query) && (!best || s.path.size() > best->path.size())) {
      best = &s;
    }
  }
  return best;
}

const Sentence* Theory::exact(const NodeName& node, const Path& path) const {
  const auto* sentences = this->node(node);
  if (!sentences) return nullptr;
  for (const Sentence& s : *sentences) {
    if (s.path == path) return &s;
  }
  return nullptr;
}

bool Theory::operator==(const Theory& o) const {
  // Order-insensitive on sentences within a node; node set equality.
  if (nodes_.size() != o.nodes_.size()) return false;
  for (const auto& [name, sentences] : nodes_) {
    const auto* others = o.node(name);
    if (!others || others->size() != sentences.size()) return false;
    for (const Sentence& s : sentences) {
      const Sentence* match = o.exact(name, s.path);
      if (!match || !(*match == s)) return false;
    }
  }
  return true;
}

}  // namespace dtag
