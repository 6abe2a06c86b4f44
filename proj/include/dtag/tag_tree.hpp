#ifndef DTAG_TAG_TREE_HPP_
#define DTAG_TAG_TREE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtag/feature_structure.hpp"

namespace dtag {

enum class NodeType { Anchor, Internal, Substitution, Foot };

std::string node_type_str(NodeType t);
std::optional<NodeType> node_type_from(const Atom& a);

/// A conventional top-down elementary tree. Anchor, substitution and
/// foot nodes are leaves; anchors may carry the lexeme that fills them.
struct TagTree {
  Atom cat;
  NodeType node_type = NodeType::Internal;
  std::optional<Atom> root;  // lexeme, anchors only
  std::optional<Atom> form;
  std::vector<TagTree> children;

  bool leaf() const { return children.empty(); }

  bool operator==(const TagTree&) const = default;
};

/// Ill-formed bottom-up encodings (leaf-typed position with children,
/// position without a category, dangling sisters at the outermost top).
class TreeError : public std::runtime_error {
 public:
  TreeError(const std::string& message, Path position)
      : std::runtime_error(message + " at position " + position.str()),
        position_(std::move(position)) {}

  const Path& position() const { return position_; }

 private:
  Path position_;
};

/// Inverts a bottom-up description into the tree it denotes.
///
/// The spine of a description runs from its entry position through
/// successive `parent` links; the topmost spine position is the root of
/// the reconstructed subtree. Each spine step contributes children: the
/// lower position's left-sister chain (reversed into surface order), the
/// subtree accumulated so far, then its right-sister chain. Sister
/// chains hold whole descriptions: each element is reconstructed
/// recursively and contributes its own top; the chain then continues
/// from that top's left/right feature.
///
/// Node types come from the `type` label; positions that end up with
/// children default to internal. Pre: fs nonempty.
TagTree reconstruct_tree(const FeatureStructure& fs);

/// The forward (anchor-upward) encoding: describes `tree` bottom-up from
/// the leaf addressed by `anchor_path` (child indices from the root),
/// such that reconstruct_tree inverts it exactly. Sister subtrees are
/// entered at their leftmost leaves. Throws std::invalid_argument when
/// anchor_path does not address a leaf.
FeatureStructure encode_tree(const TagTree& tree, const std::vector<std::size_t>& anchor_path);

}  // namespace dtag

#endif  // DTAG_TAG_TREE_HPP_
