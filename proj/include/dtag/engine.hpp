#ifndef DTAG_ENGINE_HPP_
#define DTAG_ENGINE_HPP_

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dtag/theory.hpp"

namespace dtag {

struct EngineOptions {
  // Frames on the evaluation stack before the query is cut off. The
  // corpus never needs more than ~20; the bound turns pathological
  // theories into clean errors.
  int max_depth = 512;
};

/// The local/global pair threaded through evaluation. Local inheritance
/// changes only local_node; quoted (global) inheritance replaces
/// global_node and/or global_path.
struct QueryContext {
  NodeName local_node;
  NodeName global_node;
  Path global_path;

  bool operator==(const QueryContext&) const = default;
};

/// A defined value: one or more atoms (sequence rvalues concatenate).
struct Value {
  std::vector<Atom> atoms;

  std::string str() const;  // space-joined
  bool operator==(const Value&) const = default;
};

enum class UndefReason { NoMatchingSentence, CycleDetected, DepthExceeded };

std::string undef_reason_str(UndefReason r);  // kebab-case, e.g. "no-matching-sentence"

/// Defined(Value) or Undefined(reason, at, path). Note that Defined with
/// the atom `undef` is an ordinary value: the corpus uses `undef` as its
/// explicit absence marker, which is a different thing from a query no
/// sentence matches.
class EvalOutcome {
 public:
  struct Undefined {
    UndefReason reason;
    NodeName at;
    Path path;
    bool operator==(const Undefined&) const = default;
  };

  static EvalOutcome defined(Value v) { return EvalOutcome(std::move(v)); }
  static EvalOutcome undefined(UndefReason r, NodeName at, Path path) {
    return EvalOutcome(Undefined{r, std::move(at), std::move(path)});
  }

  bool is_defined() const { return std::holds_alternative<Value>(state_); }
  const Value& value() const { return std::get<Value>(state_); }
  const Undefined& undefined_info() const { return std::get<Undefined>(state_); }
  UndefReason reason() const { return undefined_info().reason; }

  std::string str() const;  // "v" / "UNDEFINED(cycle-detected)"
  bool operator==(const EvalOutcome&) const = default;

 private:
  explicit EvalOutcome(Value v) : state_(std::move(v)) {}
  explicit EvalOutcome(Undefined u) : state_(std::move(u)) {}

  std::variant<Value, Undefined> state_;
};

/// One matched sentence on the derivation path.
/// queried_path = matched_prefix ++ extension.
struct TraceStep {
  QueryContext context;
  Path queried_path;
  Path matched_prefix;
  Rvalue matched_rvalue;
  Path extension;

  /// `NODE:<prefix> + <ext>  [global NODE:<path>]`
  std::string str() const;
};

/// Evaluates (node, path) against t by default inheritance: the longest
/// sentence path that prefixes the query is selected, the remainder
/// (extension) transports onto inherited paths. A nonexistent node is
/// Undefined(no-matching-sentence), not an error.
EvalOutcome evaluate(const Theory& t, const NodeName& node, const Path& path,
                     const EngineOptions& options = {});

/// As evaluate, plus the ordered chain of matched sentences on the
/// derivation path (for a failing query: the steps up to the failure).
std::pair<EvalOutcome, std::vector<TraceStep>> evaluate_traced(const Theory& t,
                                                               const NodeName& node,
                                                               const Path& path,
                                                               const EngineOptions& options = {});

/// Batch evaluation with memoization shared across the queries, keyed on
/// the full evaluation context so sharing never changes outcomes. Agrees
/// pointwise with evaluate.
std::map<Path, EvalOutcome> evaluate_many(const Theory& t, const NodeName& node,
                                          const std::vector<Path>& paths,
                                          const EngineOptions& options = {});

}  // namespace dtag

#endif  // DTAG_ENGINE_HPP_
