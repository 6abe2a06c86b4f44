#include "dtag/tag_tree.hpp"

#include <algorithm>

namespace dtag {

namespace {

const Atom kParent("parent");
const Atom kLeft("left");
const Atom kRight("right");
const Atom kCat("cat");
const Atom kType("type");
const Atom kRoot("root");
const Atom kForm("form");

}  // namespace

std::string node_type_str(NodeType t) {
  switch (t) {
    case NodeType::Anchor: return "anchor";
    case NodeType::Internal: return "internal";
    case NodeType::Substitution: return "substitution";
    case NodeType::Foot: return "foot";
  }
  return "?";
}

std::optional<NodeType> node_type_from(const Atom& a) {
  if (a == Atom("anchor")) return NodeType::Anchor;
  if (a == Atom("internal")) return NodeType::Internal;
  if (a == Atom("substitution")) return NodeType::Substitution;
  if (a == Atom("foot")) return NodeType::Foot;
  return std::nullopt;
}

namespace {

TagTree node_from_labels(const FeatureStructure& fs, const Path& pos, bool has_children) {
  TagTree n;
  auto cat = fs.labels.find(kCat);
  if (cat == fs.labels.end()) {
    throw TreeError("position has no cat", pos);
  }
  n.cat = cat->second;

  if (auto ty = fs.labels.find(kType); ty != fs.labels.end()) {
    auto parsed = node_type_from(ty->second);
    if (!parsed) {
      throw TreeError("unknown node type '" + ty->second.str() + "'", pos);
    }
    n.node_type = *parsed;
  } else {
    n.node_type = NodeType::Internal;
  }
  if (has_children && n.node_type != NodeType::Internal) {
    throw TreeError("leaf-typed position (" + node_type_str(n.node_type) + ") has children",
                    pos);
  }

  if (auto r = fs.labels.find(kRoot); r != fs.labels.end()) n.root = r->second;
  if (auto f = fs.labels.find(kForm); f != fs.labels.end()) n.form = f->second;
  return n;
}

struct Reconstructed {
  TagTree tree;
  const FeatureStructure* top;  // spine top of the description
  Path top_pos;
};

Reconstructed reconstruct_desc(const FeatureStructure& entry, const Path& entry_pos);

// Walks a sister chain starting at `from`'s `direction` feature. Each
// element is a full description; its reconstruction becomes one sister,
// and the chain continues from that element's spine top.
std::vector<TagTree> sister_chain(const FeatureStructure& from, const Path& from_pos,
                                  const Atom& direction) {
  std::vector<TagTree> out;
  const FeatureStructure* element = from.child(direction);
  Path element_pos = from_pos.append(direction);
  while (element) {
    Reconstructed r = reconstruct_desc(*element, element_pos);
    out.push_back(std::move(r.tree));
    element = r.top->child(direction);
    element_pos = r.top_pos.append(direction);
  }
  return out;
}

Reconstructed reconstruct_desc(const FeatureStructure& entry, const Path& entry_pos) {
  // The spine: entry, entry.parent, entry.parent.parent, ...
  std::vector<const FeatureStructure*> spine{&entry};
  std::vector<Path> spine_pos{entry_pos};
  while (const FeatureStructure* up = spine.back()->child(kParent)) {
    spine_pos.push_back(spine_pos.back().append(kParent));
    spine.push_back(up);
  }

  TagTree acc = node_from_labels(*spine.front(), spine_pos.front(), /*has_children=*/false);
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
    std::vector<TagTree> kids = sister_chain(*spine[i], spine_pos[i], kLeft);
    std::reverse(kids.begin(), kids.end());  // collected leftward; surface order
    kids.push_back(std::move(acc));
    std::vector<TagTree> rights = sister_chain(*spine[i], spine_pos[i], kRight);
    std::move(rights.begin(), rights.end(), std::back_inserter(kids));

    acc = node_from_labels(*spine[i + 1], spine_pos[i + 1], /*has_children=*/true);
    acc.children = std::move(kids);
  }
  return {std::move(acc), spine.back(), spine_pos.back()};
}

}  // namespace

TagTree reconstruct_tree(const FeatureStructure& fs) {
  if (fs.empty()) {
    throw TreeError("empty feature structure", Path{});
  }
  Reconstructed r = reconstruct_desc(fs, Path{});
  // The outermost top is the whole tree's root: sisters up there have no
  // parent node to hang from.
  if (r.top->child(kLeft) || r.top->child(kRight)) {
    throw TreeError("sister features at the outermost tree top", r.top_pos);
  }
  return std::move(r.tree);
}

namespace {

void set_labels(FeatureStructure& fs, const TagTree& n) {
  fs.labels[kCat] = n.cat;
  fs.labels[kType] = Atom(node_type_str(n.node_type));
  if (n.root) fs.labels[kRoot] = *n.root;
  if (n.form) fs.labels[kForm] = *n.form;
}

std::vector<std::size_t> leftmost_leaf_path(const TagTree& t) {
  std::vector<std::size_t> path;
  const TagTree* cur = &t;
  while (!cur->children.empty()) {
    path.push_back(0);
    cur = &cur->children.front();
  }
  return path;
}

// Encodes the description of `sub` entered at the leaf addressed by
// `leaf_path`, into `out`. Returns the fs node of the description's top.
FeatureStructure* encode_desc(const TagTree& sub, const std::vector<std::size_t>& leaf_path,
                              FeatureStructure& out);

// Lays sisters outward from a spine position: each sister's description
// hangs off the previous description's top via `direction`.
void encode_sisters(const std::vector<const TagTree*>& sisters, FeatureStructure* from,
                    const Atom& direction) {
  FeatureStructure* chain_from = from;
  for (const TagTree* sister : sisters) {
    FeatureStructure& entry = chain_from->ensure_child(direction);
    chain_from = encode_desc(*sister, leftmost_leaf_path(*sister), entry);
  }
}

FeatureStructure* encode_desc(const TagTree& sub, const std::vector<std::size_t>& leaf_path,
                              FeatureStructure& out) {
  // Nodes from the root of `sub` down to the entry leaf.
  std::vector<const TagTree*> down{&sub};
  for (std::size_t idx : leaf_path) {
    down.push_back(&down.back()->children.at(idx));
  }

  set_labels(out, *down.back());
  FeatureStructure* spine_fs = &out;
  // Walk back up from the leaf, attaching sisters and the parent.
  for (std::size_t level = down.size() - 1; level > 0; --level) {
    const TagTree& upper = *down[level - 1];
    const std::size_t idx = leaf_path[level - 1];

    std::vector<const TagTree*> lefts;  // walked outward: idx-1, idx-2, ...
    for (std::size_t i = idx; i > 0; --i) lefts.push_back(&upper.children[i - 1]);
    encode_sisters(lefts, spine_fs, kLeft);

    std::vector<const TagTree*> rights;
    for (std::size_t i = idx + 1; i < upper.children.size(); ++i)
      rights.push_back(&upper.children[i]);
    encode_sisters(rights, spine_fs, kRight);

    FeatureStructure& parent = spine_fs->ensure_child(kParent);
    set_labels(parent, upper);
    spine_fs = &parent;
  }
  return spine_fs;
}

}  // namespace

FeatureStructure encode_tree(const TagTree& tree, const std::vector<std::size_t>& anchor_path) {
  const TagTree* cur = &tree;
  for (std::size_t idx : anchor_path) {
    if (idx >= cur->children.size()) {
      throw std::invalid_argument("anchor path leaves the tree");
    }
    cur = &cur->children[idx];
  }
  if (!cur->leaf()) {
    throw std::invalid_argument("anchor path must address a leaf");
  }
  FeatureStructure fs;
  encode_desc(tree, anchor_path, fs);
  return fs;
}

}  // namespace dtag
