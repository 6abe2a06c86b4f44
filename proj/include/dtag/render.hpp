#ifndef DTAG_RENDER_HPP_
#define DTAG_RENDER_HPP_

#include <optional>
#include <string>

#include "dtag/tag_tree.hpp"

namespace dtag {

enum class TreeFormat { Bracket, Dot, Json };

std::optional<TreeFormat> tree_format_from(const std::string& name);

struct RenderOptions {
  bool unicode = false;  // bracket markers: ^ ! * (ASCII) vs ⋄ ↓ *
};

/// Renders a tree:
///  - bracket: LISP-style, e.g. (s (np!) (vp (v^ give) ...)); anchors ^,
///    substitution !, foot *; --unicode switches to ⋄/↓/*.
///  - dot: a Graphviz digraph; node labels cat[/form], anchors
///    double-circled with the lexeme on a second line.
///  - json: recursive objects with sorted keys cat, children, form,
///    root, type; empty children and absent form/root are omitted.
std::string render(const TagTree& tree, TreeFormat format, const RenderOptions& options = {});

}  // namespace dtag

#endif  // DTAG_RENDER_HPP_
