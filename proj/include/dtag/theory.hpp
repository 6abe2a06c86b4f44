#ifndef DTAG_THEORY_HPP_
#define DTAG_THEORY_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dtag/atoms.hpp"

namespace dtag {

struct SourceLocation {
  int line = 0;  // 1-based; 0 means unknown
  int column = 0;

  auto operator<=>(const SourceLocation&) const = default;
};

// Right-hand-side descriptors. The quoted source forms ("<p>", "N",
// "N:<p>") re-root evaluation at the global query context; the unquoted
// forms keep it.

struct AtomValue {
  Atom value;
  bool operator==(const AtomValue&) const = default;
};
struct LocalPathRef {
  Path path;
  bool operator==(const LocalPathRef&) const = default;
};
struct LocalNodeRef {
  NodeName node;
  bool operator==(const LocalNodeRef&) const = default;
};
struct LocalNodePathRef {
  NodeName node;
  Path path;
  bool operator==(const LocalNodePathRef&) const = default;
};
struct GlobalPathRef {
  Path path;
  bool operator==(const GlobalPathRef&) const = default;
};
struct GlobalNodeRef {
  NodeName node;
  bool operator==(const GlobalNodeRef&) const = default;
};
struct GlobalNodePathRef {
  NodeName node;
  Path path;
  bool operator==(const GlobalNodePathRef&) const = default;
};

using Descriptor = std::variant<AtomValue, LocalPathRef, LocalNodeRef, LocalNodePathRef,
                                GlobalPathRef, GlobalNodeRef, GlobalNodePathRef>;

/// Renders a descriptor in concrete syntax (quoted forms included).
std::string descriptor_str(const Descriptor& d);

/// A nonempty sequence of descriptors. The fragment only ever uses a
/// single item; sequences concatenate their items' values.
struct Rvalue {
  std::vector<Descriptor> items;

  bool operator==(const Rvalue&) const = default;
  std::string str() const;
};

struct Sentence {
  NodeName node;
  Path path;
  Rvalue rvalue;
  bool definitional = true;  // '==' (true) vs '=' (false)
  SourceLocation loc;

  bool operator==(const Sentence& o) const {
    return node == o.node && path == o.path && rvalue == o.rvalue &&
           definitional == o.definitional;
  }
};

class TheoryError : public std::runtime_error {
 public:
  explicit TheoryError(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed set of node definitions. Immutable once built; lookups are
/// read-only, so a Theory is safe to share across threads.
class Theory {
 public:
  /// Appends a sentence to its node, creating the node on first use.
  /// Throws TheoryError on a duplicate (node, path).
  void add(Sentence s);

  /// Unions another theory's sentences into this one, in its source
  /// order. Shared node names merge their sentence sets; a duplicate
  /// (node, path) is an error.
  void merge(const Theory& other);

  bool has_node(const NodeName& n) const { return nodes_.count(n) != 0; }
  /// Sentences of a node, or nullptr if the node is undefined.
  const std::vector<Sentence>* node(const NodeName& n) const;
  const std::vector<NodeName>& source_order() const { return source_order_; }
  std::size_t node_count() const { return nodes_.size(); }

  /// The sentence at `node` whose path is the longest prefix of `query`,
  /// or nullptr when no sentence path is a prefix (or the node is
  /// undefined). Unambiguous by the duplicate-path invariant.
  const Sentence* longest_prefix(const NodeName& node, const Path& query) const;
  /// Exact-path lookup.
  const Sentence* exact(const NodeName& node, const Path& path) const;

  bool operator==(const Theory& o) const;

 private:
  std::map<NodeName, std::vector<Sentence>> nodes_;
  std::vector<NodeName> source_order_;
};

}  // namespace dtag

#endif  // DTAG_THEORY_HPP_
