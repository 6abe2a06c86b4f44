#include <doctest.h>

#include "dtag/feature_structure.hpp"
#include "dtag/parser.hpp"
#include "test_support.hpp"

using namespace dtag;
using testsupport::corpus;

namespace {

std::map<Atom, Atom> labels(std::initializer_list<std::pair<const char*, const char*>> kv) {
  std::map<Atom, Atom> m;
  for (const auto& [k, v] : kv) m.emplace(Atom(k), Atom(v));
  return m;
}

}  // namespace

TEST_CASE("Give materializes exactly the eight positions of the flat listing") {
  FeatureStructure fs = extract_features(corpus(), NodeName("Give"), Path{}, 8);
  auto pos = fs.positions();
  REQUIRE(pos.size() == 8);

  const std::map<Path, std::string> expected_cats{
      {Path{}, "v"},
      {Path::of({"parent"}), "vp"},
      {Path::of({"parent", "parent"}), "s"},
      {Path::of({"parent", "left"}), "np"},
      {Path::of({"right"}), "np"},
      {Path::of({"right", "right"}), "p"},
      {Path::of({"right", "right", "parent"}), "pp"},
      {Path::of({"right", "right", "right"}), "np"},
  };
  for (const auto& [p, cat] : expected_cats) {
    REQUIRE(pos.count(p) == 1);
    CHECK(pos.at(p).at(Atom("cat")) == Atom(cat));
  }

  CHECK(pos.at(Path{}) == labels({{"cat", "v"}, {"type", "anchor"}, {"root", "give"}}));
  CHECK(pos.at(Path::of({"right", "right"})) ==
        labels({{"cat", "p"}, {"type", "anchor"}, {"root", "to"}}));
  CHECK(pos.at(Path::of({"parent"})) == labels({{"cat", "vp"}, {"type", "internal"}}));
  CHECK(pos.at(Path::of({"right"})) == labels({{"cat", "np"}, {"type", "substitution"}}));
}

TEST_CASE("Die has no complements: four positions only") {
  FeatureStructure fs = extract_features(corpus(), NodeName("Die"), Path{}, 8);
  auto pos = fs.positions();
  REQUIRE(pos.size() == 4);
  CHECK(pos.count(Path{}) == 1);
  CHECK(pos.count(Path::of({"parent"})) == 1);
  CHECK(pos.count(Path::of({"parent", "parent"})) == 1);
  CHECK(pos.count(Path::of({"parent", "left"})) == 1);
}

TEST_CASE("a single-sentence theory yields a single position") {
  Theory t = parse_theory("X:\n <cat> == v.");
  FeatureStructure fs = extract_features(t, NodeName("X"), Path{}, 8);
  auto pos = fs.positions();
  REQUIRE(pos.size() == 1);
  CHECK(pos.at(Path{}) == labels({{"cat", "v"}}));
}

TEST_CASE("undef and no-match both read as absence") {
  Theory t = parse_theory("X:\n <cat> == v\n <parent cat> == undef\n <left type> == undef.");
  FeatureStructure fs = extract_features(t, NodeName("X"), Path{}, 8);
  CHECK(fs.positions().size() == 1);

  // An entry with nothing defined probes to an empty structure.
  CHECK(extract_features(corpus(), NodeName("Word3"), Path::of({"surface"}), 8).empty());
  CHECK(extract_features(t, NodeName("Missing"), Path{}, 8).empty());
}

TEST_CASE("probing a derived prefix sees the derived structure") {
  FeatureStructure fs =
      extract_features(corpus(), NodeName("Give-dat"), Path::of({"surface"}), 8);
  auto pos = fs.positions();
  // Dative: the bare NP replaces the three-position PP subtree.
  REQUIRE(pos.size() == 6);
  CHECK(pos.at(Path::of({"right", "right"})) ==
        labels({{"cat", "np"}, {"type", "substitution"}}));
  CHECK(pos.count(Path::of({"right", "right", "parent"})) == 0);
  CHECK(pos.count(Path::of({"right", "right", "right"})) == 0);
}

TEST_CASE("probing is monotone in depth") {
  const NodeName give("Give");
  std::map<Path, std::map<Atom, Atom>> prev;
  for (int depth = 1; depth <= 6; ++depth) {
    auto cur = extract_features(corpus(), give, Path{}, depth).positions();
    for (const auto& [p, l] : prev) {
      REQUIRE(cur.count(p) == 1);
      CHECK(cur.at(p) == l);
    }
    prev = std::move(cur);
  }
}

TEST_CASE("depth limits how far probing descends") {
  auto pos = extract_features(corpus(), NodeName("Give"), Path{}, 1).positions();
  CHECK(pos.size() == 3);  // epsilon, parent, right
  CHECK(pos.count(Path::of({"parent", "parent"})) == 0);
}

TEST_CASE("cycles inside probes surface as ProbeError with the position") {
  Theory t = parse_theory("X:\n <cat> == v\n <parent cat> == X:<parent cat>.");
  try {
    extract_features(t, NodeName("X"), Path{}, 4);
    FAIL("expected ProbeError");
  } catch (const ProbeError& e) {
    CHECK(e.reason() == UndefReason::CycleDetected);
    CHECK(e.position() == Path::of({"parent", "cat"}));
  }
}

TEST_CASE("unknown labels ride along opaquely when configured") {
  Theory t = parse_theory("X:\n <cat> == v\n <color> == red.");
  LtagVocabulary vocab = LtagVocabulary::standard();
  vocab.labels.emplace_back("color");
  FeatureStructure fs = extract_features(t, NodeName("X"), Path{}, 4, vocab);
  CHECK(fs.labels == labels({{"cat", "v"}, {"color", "red"}}));
}
