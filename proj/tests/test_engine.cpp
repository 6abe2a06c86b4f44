#include <doctest.h>

#include <set>

#include "dtag/engine.hpp"
#include "dtag/parser.hpp"
#include "test_support.hpp"

using namespace dtag;
using testsupport::corpus;

namespace {

Value val(std::initializer_list<const char*> atoms) {
  Value v;
  for (const char* a : atoms) v.atoms.emplace_back(a);
  return v;
}

EvalOutcome q(const Theory& t, const char* node, std::initializer_list<std::string_view> path) {
  return evaluate(t, NodeName(node), Path::of(path));
}

}  // namespace

TEST_CASE("the hierarchy reproduces the flat Give description") {
  const Theory& t = corpus();
  CHECK(q(t, "Give", {"cat"}) == EvalOutcome::defined(val({"v"})));
  CHECK(q(t, "Give", {"parent", "cat"}) == EvalOutcome::defined(val({"vp"})));
  CHECK(q(t, "Give", {"parent", "left", "cat"}) == EvalOutcome::defined(val({"np"})));
  CHECK(q(t, "Give", {"parent", "parent", "cat"}) == EvalOutcome::defined(val({"s"})));
  CHECK(q(t, "Give", {"right", "cat"}) == EvalOutcome::defined(val({"np"})));
  CHECK(q(t, "Give", {"right", "right", "cat"}) == EvalOutcome::defined(val({"p"})));
  CHECK(q(t, "Give", {"right", "right", "parent", "cat"}) == EvalOutcome::defined(val({"pp"})));
  CHECK(q(t, "Give", {"right", "right", "right", "cat"}) == EvalOutcome::defined(val({"np"})));
  // The hierarchy adds type and root on top of the flat listing.
  CHECK(q(t, "Give", {"type"}) == EvalOutcome::defined(val({"anchor"})));
  CHECK(q(t, "Give", {"root"}) == EvalOutcome::defined(val({"give"})));
  CHECK(q(t, "Give", {"right", "right", "root"}) == EvalOutcome::defined(val({"to"})));
}

TEST_CASE("undef is an ordinary defined value, distinct from no-match") {
  const Theory& t = corpus();
  CHECK(q(t, "Die", {"right", "cat"}) == EvalOutcome::defined(val({"undef"})));
  CHECK(q(t, "Die", {"root"}) == EvalOutcome::defined(val({"die"})));

  EvalOutcome missing = q(t, "Nonesuch", {"cat"});
  REQUIRE_FALSE(missing.is_defined());
  CHECK(missing.reason() == UndefReason::NoMatchingSentence);

  // A constraint-violating word still resolves surface paths to undef
  // through the hierarchy default; nothing materializes from them.
  CHECK(q(t, "Word3", {"surface", "cat"}) == EvalOutcome::defined(val({"undef"})));
}

TEST_CASE("every <left ...> probe at Give bottoms out at undef") {
  const Theory& t = corpus();
  const std::vector<std::string> feats{"parent", "left", "right", "cat", "type", "root", "form"};
  std::vector<Path> frontier{Path::of({"left"})};
  int checked = 0;
  for (int len = 1; len <= 4; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      EvalOutcome out = evaluate(t, NodeName("Give"), p);
      CHECK(out == EvalOutcome::defined(val({"undef"})));
      ++checked;
      for (const auto& f : feats) next.push_back(p.append(Atom(f)));
    }
    frontier = std::move(next);
  }
  CHECK(checked == 1 + 7 + 49 + 343);
}

TEST_CASE("direct atom lookup") {
  Theory t = parse_theory("X:\n <a> == b.");
  CHECK(q(t, "X", {"a"}) == EvalOutcome::defined(val({"b"})));
  CHECK_FALSE(q(t, "X", {"zz"}).is_defined());
}

TEST_CASE("atom rvalues discard leftover extensions") {
  Theory t = parse_theory("X:\n <cat> == v.");
  CHECK(q(t, "X", {"cat", "foo"}) == EvalOutcome::defined(val({"v"})));
  auto [out, steps] = evaluate_traced(t, NodeName("X"), Path::of({"cat", "foo"}));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].str().find("(extension discarded)") != std::string::npos);
}

TEST_CASE("self-loop and mutual loops are cycles, not hangs") {
  Theory self = parse_theory("X:\n <> == X.");
  EvalOutcome out = q(self, "X", {"a"});
  REQUIRE_FALSE(out.is_defined());
  CHECK(out.reason() == UndefReason::CycleDetected);

  Theory mutual = parse_theory("X:\n <> == Y.\nY:\n <> == Z.\nZ:\n <> == X.");
  EvalOutcome out2 = q(mutual, "X", {"a"});
  REQUIRE_FALSE(out2.is_defined());
  CHECK(out2.reason() == UndefReason::CycleDetected);
}

TEST_CASE("revisiting a node with a different path is not a cycle") {
  // The hierarchy funnels through TREENODE constantly; only a repeated
  // full context is cyclic.
  CHECK(q(corpus(), "Give", {"right", "type"}) ==
        EvalOutcome::defined(val({"substitution"})));
}

TEST_CASE("the depth bound turns runaway growth into a clean error") {
  // <a> matches, extension re-grows the path: no context ever repeats.
  Theory t = parse_theory("X:\n <a> == <a b>.");
  EngineOptions small;
  small.max_depth = 32;
  EvalOutcome out = evaluate(t, NodeName("X"), Path::of({"a"}), small);
  REQUIRE_FALSE(out.is_defined());
  CHECK(out.reason() == UndefReason::DepthExceeded);

  Theory deep = parse_theory(
      "A:\n <x> == B:<x>.\nB:\n <x> == C:<x>.\nC:\n <x> == D:<x>.\nD:\n <x> == ok.");
  EngineOptions tiny;
  tiny.max_depth = 3;
  CHECK(evaluate(deep, NodeName("A"), Path::of({"x"}), tiny).reason() ==
        UndefReason::DepthExceeded);
  CHECK(evaluate(deep, NodeName("A"), Path::of({"x"})).is_defined());
}

TEST_CASE("quoted node inherits at the global path") {
  Theory t = parse_theory(
      "A:\n <a> == <b c>\n <b c> == \"B\".\n"
      "B:\n <a> == hit\n <b c> == miss.");
  // By the time "B" is reached the local path is <b c>, but the global
  // path is still the original query <a>.
  CHECK(q(t, "A", {"a"}) == EvalOutcome::defined(val({"hit"})));

  Theory local = parse_theory(
      "A:\n <a> == <b c>\n <b c> == B.\n"
      "B:\n <a> == hit\n <b c> == miss.");
  CHECK(q(local, "A", {"a"}) == EvalOutcome::defined(val({"miss"})));
}

TEST_CASE("quoted node:path re-roots and transports the extension") {
  Theory t = parse_theory("A:\n <a> == \"B:<x>\".\nB:\n <x e> == ok\n <g> == \"<x>\".");
  CHECK(q(t, "A", {"a", "e"}) == EvalOutcome::defined(val({"ok"})));
  // After the hop, B is the global node: "<x>" at B now means B:<x ...>.
  CHECK(q(t, "B", {"g", "e"}) == EvalOutcome::defined(val({"ok"})));
}

TEST_CASE("quoted path re-roots at the original query node") {
  Theory t = parse_theory(
      "T:\n <out> == \"<in>\".\n"
      "C:\n <> == T\n <out form> == pass.\n"
      "W:\n <> == C\n <in x> == vv.");
  CHECK(q(t, "W", {"out", "x"}) == EvalOutcome::defined(val({"vv"})));
  CHECK(q(t, "W", {"out", "form"}) == EvalOutcome::defined(val({"pass"})));
  // Queried directly at C there is no <in x> anywhere: undefined.
  CHECK_FALSE(q(t, "C", {"out", "x"}).is_defined());
}

TEST_CASE("sequences concatenate and one undefined item poisons the whole") {
  Theory t = parse_theory("X:\n <a> == y z\n <b> == y <missing>.");
  CHECK(q(t, "X", {"a"}) == EvalOutcome::defined(val({"y", "z"})));
  CHECK_FALSE(q(t, "X", {"b"}).is_defined());
}

TEST_CASE("sequence items each see the original step's context") {
  Theory t = parse_theory(
      "A:\n <a> == \"<g>\" \"B\"\n <g> == g1.\n"
      "B:\n <a> == orig\n <g> == leaked.");
  // The first item's global hop must not leak into the second: "B"
  // evaluates at the original global path <a>.
  CHECK(q(t, "A", {"a"}) == EvalOutcome::defined(val({"g1", "orig"})));
}

TEST_CASE("trace of Give cat walks the hierarchy in 4 steps") {
  auto [out, steps] = evaluate_traced(corpus(), NodeName("Give"), Path::of({"cat"}));
  CHECK(out == EvalOutcome::defined(val({"v"})));
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].context.local_node == NodeName("Give"));
  CHECK(steps[1].context.local_node == NodeName("VERB+NP+PP"));
  CHECK(steps[2].context.local_node == NodeName("VERB+NP"));
  CHECK(steps[3].context.local_node == NodeName("VERB"));
  CHECK(steps[3].matched_prefix == Path::of({"cat"}));
  CHECK(steps[3].extension.empty());
  CHECK(steps[0].str() == "Give:<> + <cat>  [global Give:<cat>]");
}

TEST_CASE("the final match for a fully defined path has an empty extension") {
  auto [out, steps] =
      evaluate_traced(corpus(), NodeName("Give"), Path::of({"right", "right", "root"}));
  CHECK(out == EvalOutcome::defined(val({"to"})));
  REQUIRE_FALSE(steps.empty());
  CHECK(steps.back().matched_prefix == Path::of({"right", "right", "root"}));
  CHECK(steps.back().extension.empty());
}

// Trace-level invariants, checked over a sweep of corpus queries. The
// corpus has single-descriptor rvalues throughout, so consecutive steps
// are parent/child in the derivation and the checks below apply.
TEST_CASE("extension transport and global stability along traces") {
  const Theory& t = corpus();
  const std::vector<std::string> feats{"parent", "left", "right"};
  const std::vector<std::string> labels{"cat", "type", "root", "form"};
  std::vector<Path> bases{Path{}};
  std::size_t level_start = 0;
  for (int len = 0; len < 2; ++len) {
    const std::size_t level_end = bases.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (const auto& f : feats) bases.push_back(bases[i].append(Atom(f)));
    }
    level_start = level_end;
  }
  std::vector<Path> queries;
  for (const auto& b : bases) {
    for (const auto& l : labels) queries.push_back(b.append(Atom(l)));
  }

  int steps_checked = 0;
  for (const char* node : {"Give", "Die", "Eat", "Spare", "AUXVERB", "Give-dat"}) {
    for (const Path& query : queries) {
      auto [out, steps] = evaluate_traced(t, NodeName(node), query);
      for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const TraceStep& cur = steps[i];
        const TraceStep& next = steps[i + 1];
        REQUIRE(cur.matched_rvalue.items.size() == 1);
        const Descriptor& d = cur.matched_rvalue.items.front();
        ++steps_checked;

        // queried_path = matched prefix ++ extension, stepwise.
        CHECK(cur.matched_prefix.concat(cur.extension) == cur.queried_path);

        if (const auto* lp = std::get_if<LocalPathRef>(&d)) {
          CHECK(next.queried_path == lp->path.concat(cur.extension));
          CHECK(next.context.local_node == cur.context.local_node);
        } else if (const auto* ln = std::get_if<LocalNodeRef>(&d)) {
          CHECK(next.queried_path == cur.queried_path);
          CHECK(next.context.local_node == ln->node);
        } else if (const auto* lnp = std::get_if<LocalNodePathRef>(&d)) {
          CHECK(next.queried_path == lnp->path.concat(cur.extension));
          CHECK(next.context.local_node == lnp->node);
        } else if (const auto* gp = std::get_if<GlobalPathRef>(&d)) {
          CHECK(next.queried_path == gp->path.concat(cur.extension));
          CHECK(next.context.global_path == gp->path.concat(cur.extension));
          CHECK(next.context.global_node == cur.context.global_node);
        } else if (const auto* gn = std::get_if<GlobalNodeRef>(&d)) {
          CHECK(next.queried_path == cur.context.global_path);
          CHECK(next.context.global_node == gn->node);
        } else if (const auto* gnp = std::get_if<GlobalNodePathRef>(&d)) {
          CHECK(next.queried_path == gnp->path.concat(cur.extension));
          CHECK(next.context.global_node == gnp->node);
          CHECK(next.context.global_path == gnp->path.concat(cur.extension));
        }

        // Global context never moves on a local step.
        if (!std::holds_alternative<GlobalPathRef>(d) &&
            !std::holds_alternative<GlobalNodeRef>(d) &&
            !std::holds_alternative<GlobalNodePathRef>(d)) {
          CHECK(next.context.global_node == cur.context.global_node);
          CHECK(next.context.global_path == cur.context.global_path);
        }
      }
    }
  }
  CHECK(steps_checked > 500);
}

TEST_CASE("evaluate is deterministic") {
  const Theory& t = corpus();
  const Path p = Path::of({"right", "right", "parent", "cat"});
  CHECK(evaluate(t, NodeName("Give"), p) == evaluate(t, NodeName("Give"), p));
}

TEST_CASE("evaluate_many agrees pointwise with evaluate") {
  const Theory& t = corpus();

  auto batch = evaluate_many(t, NodeName("Give"), {Path::of({"cat"}), Path::of({"type"})});
  CHECK(batch.at(Path::of({"cat"})) == EvalOutcome::defined(val({"v"})));
  CHECK(batch.at(Path::of({"type"})) == EvalOutcome::defined(val({"anchor"})));

  CHECK(evaluate_many(t, NodeName("Give"), {}).empty());

  // 100 random paths over the feature alphabet, batch vs single.
  std::mt19937 rng(7);
  const std::vector<std::string> alphabet{"parent", "left",  "right", "cat",  "type",
                                          "root",   "form",  "surface", "output", "input",
                                          "dative", "passive"};
  std::vector<Path> paths;
  for (int i = 0; i < 100; ++i) {
    std::vector<Atom> attrs;
    const int len = static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) {
      attrs.emplace_back(alphabet[rng() % alphabet.size()]);
    }
    paths.emplace_back(std::move(attrs));
  }
  for (const char* node : {"Give", "Give-dat", "Word2"}) {
    auto many = evaluate_many(t, NodeName(node), paths);
    for (const Path& p : paths) {
      CHECK(many.at(p) == evaluate(t, NodeName(node), p));
    }
  }
}

TEST_CASE("longest-prefix selection matches the reference evaluator on random theories") {
  testsupport::TheoryGen gen(42);
  EngineOptions opt;
  opt.max_depth = testsupport::kCompareDepth;
  int disagreements = 0;
  int compared = 0;
  for (int i = 0; i < 60; ++i) {
    Theory t = gen.theory();
    const auto queries = gen.all_query_paths();
    for (const char* node : {"A", "B"}) {
      for (const Path& p : queries) {
        EvalOutcome engine = evaluate(t, NodeName(node), p, opt);
        refeval::Outcome oracle = refeval::query(t, NodeName(node), p,
                                                 testsupport::kCompareDepth);
        ++compared;
        if (!testsupport::outcomes_agree(engine, oracle)) ++disagreements;
      }
    }
  }
  CHECK(compared > 5000);
  CHECK(disagreements == 0);
}

TEST_CASE("longest prefix wins: nested definitions select the most specific") {
  Theory t = parse_theory("X:\n <> == top\n <a> == mid\n <a b> == deep.");
  CHECK(q(t, "X", {"z"}) == EvalOutcome::defined(val({"top"})));
  CHECK(q(t, "X", {"a"}) == EvalOutcome::defined(val({"mid"})));
  CHECK(q(t, "X", {"a", "z"}) == EvalOutcome::defined(val({"mid"})));
  CHECK(q(t, "X", {"a", "b"}) == EvalOutcome::defined(val({"deep"})));
  CHECK(q(t, "X", {"a", "b", "c", "d"}) == EvalOutcome::defined(val({"deep"})));

  // First trace step must always match the longest defined prefix.
  testsupport::TheoryGen gen(99);
  for (int i = 0; i < 20; ++i) {
    Theory rt = gen.theory();
    for (const Path& p : gen.all_query_paths()) {
      auto [out, steps] = evaluate_traced(rt, NodeName("A"), p);
      if (steps.empty()) continue;
      std::size_t longest = 0;
      bool any = false;
      for (const Sentence& s : *rt.node(NodeName("A"))) {
        if (s.path.prefix_of(p)) {
          any = true;
          longest = std::max(longest, s.path.size());
        }
      }
      REQUIRE(any);
      CHECK(steps.front().matched_prefix.size() == longest);
    }
  }
}
