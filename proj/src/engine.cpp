#include "dtag/engine.hpp"

#include <algorithm>
#include <sstream>

namespace dtag {

std::string Value::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out << ' ';
    out << atoms[i].str();
  }
  return out.str();
}

std::string undef_reason_str(UndefReason r) {
  switch (r) {
    case UndefReason::NoMatchingSentence: return "no-matching-sentence";
    case UndefReason::CycleDetected: return "cycle-detected";
    case UndefReason::DepthExceeded: return "depth-exceeded";
  }
  return "?";
}

std::string EvalOutcome::str() const {
  if (is_defined()) return value().str();
  return "UNDEFINED(" + undef_reason_str(reason()) + ")";
}

std::string TraceStep::str() const {
  std::string s = context.local_node.str() + ":" + matched_prefix.str() + " + " +
                  extension.str() + "  [global " + context.global_node.str() + ":" +
                  context.global_path.str() + "]";
  // An atom rvalue swallows whatever extension is left over; make that
  // visible when it happens.
  const bool all_atoms = std::all_of(
      matched_rvalue.items.begin(), matched_rvalue.items.end(),
      [](const Descriptor& d) { return std::holds_alternative<AtomValue>(d); });
  if (all_atoms && !extension.empty()) s += " (extension discarded)";
  return s;
}

namespace {

struct Frame {
  NodeName local;
  Path path;
  NodeName global_node;
  Path global_path;

  bool operator==(const Frame&) const = default;
  auto operator<=>(const Frame&) const = default;
};

class Evaluator {
 public:
  Evaluator(const Theory& t, const EngineOptions& opt, bool tracing, bool memoizing)
      : theory_(t), options_(opt), tracing_(tracing), memoizing_(memoizing) {}

  EvalOutcome query(const NodeName& node, const Path& path) {
    return eval(node, path, node, path);
  }

  std::vector<TraceStep> take_trace() { return std::move(trace_); }

 private:
  EvalOutcome eval(const NodeName& local, const Path& path, const NodeName& gnode,
                   const Path& gpath) {
    const Frame frame{local, path, gnode, gpath};
    if (static_cast<int>(stack_.size()) >= options_.max_depth) {
      return EvalOutcome::undefined(UndefReason::DepthExceeded, local, path);
    }
    if (std::find(stack_.begin(), stack_.end(), frame) != stack_.end()) {
      return EvalOutcome::undefined(UndefReason::CycleDetected, local, path);
    }
    if (memoizing_) {
      if (auto it = memo_.find(frame); it != memo_.end()) return it->second;
    }

    const Sentence* match = theory_.longest_prefix(local, path);
    if (!match) {
      EvalOutcome out = EvalOutcome::undefined(UndefReason::NoMatchingSentence, local, path);
      remember(frame, out);
      return out;
    }
    const Path ext = path.suffix(match->path.size());

    if (tracing_) {
      trace_.push_back(TraceStep{QueryContext{local, gnode, gpath}, path, match->path,
                                 match->rvalue, ext});
    }

    stack_.push_back(frame);
    EvalOutcome out = eval_rvalue(match->rvalue, local, path, ext, gnode, gpath);
    stack_.pop_back();

    remember(frame, out);
    return out;
  }

  EvalOutcome eval_rvalue(const Rvalue& rv, const NodeName& local, const Path& path,
                          const Path& ext, const NodeName& gnode, const Path& gpath) {
    std::vector<Atom> atoms;
    for (const Descriptor& d : rv.items) {
      // Every item of a sequence sees the context of the step that
      // selected it; global hops inside one item do not leak into the
      // next.
      EvalOutcome item = eval_descriptor(d, local, path, ext, gnode, gpath);
      if (!item.is_defined()) return item;
      const auto& v = item.value().atoms;
      atoms.insert(atoms.end(), v.begin(), v.end());
    }
    return EvalOutcome::defined(Value{std::move(atoms)});
  }

  EvalOutcome eval_descriptor(const Descriptor& d, const NodeName& local, const Path& path,
                              const Path& ext, const NodeName& gnode, const Path& gpath) {
    if (const auto* a = std::get_if<AtomValue>(&d)) {
      // Atom values discard any leftover extension.
      return EvalOutcome::defined(Value{{a->value}});
    }
    if (const auto* lp = std::get_if<LocalPathRef>(&d)) {
      return eval(local, lp->path.concat(ext), gnode, gpath);
    }
    if (const auto* ln = std::get_if<LocalNodeRef>(&d)) {
      // Bare node: the full queried path (prefix and extension) carries.
      return eval(ln->node, path, gnode, gpath);
    }
    if (const auto* lnp = std::get_if<LocalNodePathRef>(&d)) {
      return eval(lnp->node, lnp->path.concat(ext), gnode, gpath);
    }
    if (const auto* gp = std::get_if<GlobalPathRef>(&d)) {
      const Path q = gp->path.concat(ext);
      return eval(gnode, q, gnode, q);
    }
    if (const auto* gn = std::get_if<GlobalNodeRef>(&d)) {
      return eval(gn->node, gpath, gn->node, gpath);
    }
    const auto& gnp = std::get<GlobalNodePathRef>(d);
    const Path q = gnp.path.concat(ext);
    return eval(gnp.node, q, gnp.node, q);
  }

  void remember(const Frame& frame, const EvalOutcome& out) {
    if (!memoizing_) return;
    // Cycle and depth outcomes depend on the active stack, so caching
    // them could change the reported failure point between batch and
    // single evaluation. Values and plain no-match are stack-free.
    if (out.is_defined() || out.reason() == UndefReason::NoMatchingSentence) {
      memo_.emplace(frame, out);
    }
  }

  const Theory& theory_;
  const EngineOptions& options_;
  bool tracing_;
  bool memoizing_;
  std::vector<Frame> stack_;
  std::vector<TraceStep> trace_;
  std::map<Frame, EvalOutcome> memo_;
};

}  // namespace

EvalOutcome evaluate(const Theory& t, const NodeName& node, const Path& path,
                     const EngineOptions& options) {
  return Evaluator(t, options, /*tracing=*/false, /*memoizing=*/false).query(node, path);
}

std::pair<EvalOutcome, std::vector<TraceStep>> evaluate_traced(const Theory& t,
                                                               const NodeName& node,
                                                               const Path& path,
                                                               const EngineOptions& options) {
  Evaluator ev(t, options, /*tracing=*/true, /*memoizing=*/false);
  EvalOutcome out = ev.query(node, path);
  return {std::move(out), ev.take_trace()};
}

std::map<Path, EvalOutcome> evaluate_many(const Theory& t, const NodeName& node,
                                          const std::vector<Path>& paths,
                                          const EngineOptions& options) {
  Evaluator ev(t, options, /*tracing=*/false, /*memoizing=*/true);
  std::map<Path, EvalOutcome> out;
  for (const Path& p : paths) {
    out.insert_or_assign(p, ev.query(node, p));
  }
  return out;
}

}  // namespace dtag
