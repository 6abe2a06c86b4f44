#include "dtag/feature_structure.hpp"

#include <algorithm>
#include <deque>

namespace dtag {

const LtagVocabulary& LtagVocabulary::standard() {
  static const LtagVocabulary v{
      {Atom("parent"), Atom("left"), Atom("right")},
      {Atom("cat"), Atom("type"), Atom("root"), Atom("form")},
  };
  return v;
}

bool LtagVocabulary::is_structural(const Atom& a) const {
  return std::find(structural.begin(), structural.end(), a) != structural.end();
}

const FeatureStructure* FeatureStructure::child(const Atom& feature) const {
  for (const auto& [f, fs] : children_) {
    if (f == feature) return &fs;
  }
  return nullptr;
}

FeatureStructure& FeatureStructure::ensure_child(const Atom& feature) {
  auto it = std::lower_bound(children_.begin(), children_.end(), feature,
                             [](const auto& entry, const Atom& f) { return entry.first < f; });
  if (it != children_.end() && it->first == feature) return it->second;
  return children_.insert(it, {feature, FeatureStructure{}})->second;
}

std::map<Path, std::map<Atom, Atom>> FeatureStructure::positions() const {
  std::map<Path, std::map<Atom, Atom>> out;
  struct Item {
    const FeatureStructure* fs;
    Path pos;
  };
  std::deque<Item> queue{{this, Path{}}};
  while (!queue.empty()) {
    auto [fs, pos] = queue.front();
    queue.pop_front();
    out.emplace(pos, fs->labels);
    for (const auto& [f, sub] : fs->children_) {
      queue.push_back({&sub, pos.append(f)});
    }
  }
  return out;
}

bool FeatureStructure::operator==(const FeatureStructure& o) const {
  return labels == o.labels && children_ == o.children_;
}

namespace {

// Labels of one candidate position; empty map = absent position.
std::map<Atom, Atom> probe_labels(const Theory& t, const NodeName& node, const Path& full_pos,
                                  const LtagVocabulary& vocab, const EngineOptions& options) {
  static const Atom undef_atom("undef");
  std::map<Atom, Atom> labels;
  for (const Atom& label : vocab.labels) {
    const Path query = full_pos.append(label);
    EvalOutcome out = evaluate(t, node, query, options);
    if (!out.is_defined()) {
      if (out.reason() != UndefReason::NoMatchingSentence) {
        throw ProbeError(query, out.reason());
      }
      continue;
    }
    const auto& atoms = out.value().atoms;
    if (atoms.size() == 1 && atoms.front() != undef_atom) {
      labels.emplace(label, atoms.front());
    }
  }
  return labels;
}

}  // namespace

FeatureStructure extract_features(const Theory& t, const NodeName& node, const Path& prefix,
                                  int depth, const LtagVocabulary& vocab,
                                  const EngineOptions& options) {
  FeatureStructure root;
  root.labels = probe_labels(t, node, prefix, vocab, options);
  if (root.labels.empty()) return root;  // nothing defined at all

  struct Item {
    FeatureStructure* fs;
    Path pos;  // structural position relative to the prefix
  };
  std::deque<Item> queue{{&root, Path{}}};
  while (!queue.empty()) {
    auto [fs, pos] = queue.front();
    queue.pop_front();
    if (static_cast<int>(pos.size()) >= depth) continue;
    // Insert every materialized child before queueing any of them: the
    // children vector may reallocate on insert.
    std::vector<Atom> materialized;
    for (const Atom& feature : vocab.structural) {
      auto labels = probe_labels(t, node, prefix.concat(pos.append(feature)), vocab, options);
      if (labels.empty()) continue;
      fs->ensure_child(feature).labels = std::move(labels);
      materialized.push_back(feature);
    }
    for (const Atom& feature : materialized) {
      queue.push_back({&fs->ensure_child(feature), pos.append(feature)});
    }
  }
  return root;
}

}  // namespace dtag
