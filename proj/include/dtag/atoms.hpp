#ifndef DTAG_ATOMS_HPP_
#define DTAG_ATOMS_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dtag {

// The two lexical spaces are disjoint: the case of the first character
// decides. Atoms start with a lowercase letter or digit, node names with
// an uppercase letter.

/// A value/attribute token: lowercase or digit initial, then letters,
/// digits and '-'.
class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string text);

  static bool valid(std::string_view text);

  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }

  auto operator<=>(const Atom&) const = default;

 private:
  std::string text_;
};

/// A node name: uppercase initial, then letters, digits, '+' and '-'.
/// Synthesized nodes additionally carry '%', which the lexer never
/// accepts, so they cannot collide with source-level names.
class NodeName {
 public:
  NodeName() = default;
  explicit NodeName(std::string text);

  static bool valid(std::string_view text);
  static NodeName derived(std::string text);

  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }

  auto operator<=>(const NodeName&) const = default;

 private:
  struct Unchecked {};
  NodeName(Unchecked, std::string text) : text_(std::move(text)) {}

  std::string text_;
};

/// An ordered sequence of attribute atoms. The empty path <> is valid
/// and distinct from every nonempty path.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Atom> attrs) : attrs_(std::move(attrs)) {}

  /// Convenience builder: Path::of({"parent", "cat"}).
  static Path of(std::initializer_list<std::string_view> attrs);

  std::size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }
  const Atom& operator[](std::size_t i) const { return attrs_[i]; }

  auto begin() const { return attrs_.begin(); }
  auto end() const { return attrs_.end(); }

  /// True iff this path's attributes are an initial segment of q's.
  bool prefix_of(const Path& q) const;

  Path concat(const Path& ext) const;
  Path append(const Atom& attr) const;
  /// Elements [from, size).
  Path suffix(std::size_t from) const;

  /// Renders as "<a b c>"; the empty path as "<>".
  std::string str() const;

  auto operator<=>(const Path&) const = default;

 private:
  std::vector<Atom> attrs_;
};

}  // namespace dtag

template <>
struct std::hash<dtag::Atom> {
  std::size_t operator()(const dtag::Atom& a) const noexcept {
    return std::hash<std::string>{}(a.str());
  }
};

template <>
struct std::hash<dtag::NodeName> {
  std::size_t operator()(const dtag::NodeName& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};

template <>
struct std::hash<dtag::Path> {
  std::size_t operator()(const dtag::Path& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& a : p) {
      h ^= std::hash<dtag::Atom>{}(a);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

#endif  // DTAG_ATOMS_HPP_
