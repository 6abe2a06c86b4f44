#ifndef DTAG_FEATURE_STRUCTURE_HPP_
#define DTAG_FEATURE_STRUCTURE_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtag/engine.hpp"
#include "dtag/theory.hpp"

namespace dtag {

/// The probe vocabulary: structural features span tree positions, label
/// features carry node content. Extendable; unknown labels ride along
/// opaquely into the feature structure and json output.
struct LtagVocabulary {
  std::vector<Atom> structural;  // parent, left, right
  std::vector<Atom> labels;      // cat, type, root, form

  static const LtagVocabulary& standard();
  bool is_structural(const Atom& a) const;
};

/// The extracted, finite attribute tree for one entry: each position
/// holds label values and structural children. A position exists only if
/// at least one label probe came back defined and not `undef`; probing
/// never descends through absent positions, so parents always exist.
class FeatureStructure {
 public:
  std::map<Atom, Atom> labels;

  const FeatureStructure* child(const Atom& feature) const;
  FeatureStructure& ensure_child(const Atom& feature);
  const std::vector<std::pair<Atom, FeatureStructure>>& children() const { return children_; }

  bool empty() const { return labels.empty() && children_.empty(); }

  /// Flattens to position -> labels, positions as structural paths.
  std::map<Path, std::map<Atom, Atom>> positions() const;

  bool operator==(const FeatureStructure& o) const;

 private:
  std::vector<std::pair<Atom, FeatureStructure>> children_;  // sorted by feature
};

/// A cycle or depth failure surfaced by a probe, annotated with the
/// position being probed.
class ProbeError : public std::runtime_error {
 public:
  ProbeError(Path position, UndefReason reason)
      : std::runtime_error("probe at " + position.str() + " failed: " +
                           undef_reason_str(reason)),
        position_(std::move(position)),
        reason_(reason) {}

  const Path& position() const { return position_; }
  UndefReason reason() const { return reason_; }

 private:
  Path position_;
  UndefReason reason_;
};

/// Breadth-limited probing of (node, prefix ++ position ++ label) for all
/// positions over the structural features up to `depth` links deep.
/// `undef` counts as absence. An entry with nothing defined yields an
/// empty structure.
FeatureStructure extract_features(const Theory& t, const NodeName& node, const Path& prefix,
                                  int depth, const LtagVocabulary& vocab = LtagVocabulary::standard(),
                                  const EngineOptions& options = {});

}  // namespace dtag

#endif  // DTAG_FEATURE_STRUCTURE_HPP_
