#ifndef DTAG_LINT_HPP_
#define DTAG_LINT_HPP_

#include <string>
#include <vector>

#include "dtag/theory.hpp"

namespace dtag {

enum class Severity {
  Notice,   // informational; emitted only under strict
  Warning,  // suspicious but legal
};

struct Diagnostic {
  Severity severity;
  NodeName node;
  std::string message;
};

/// Non-fatal checks over a well-formed theory:
///  - references to undefined node names (warning);
///  - mixed '='/'==' within one node (warning);
///  - strict only: two sentences whose paths are in a prefix relation and
///    whose rvalues name different nodes (notice — legal default
///    overriding, flagged for grammar writers who want orthogonal
///    inheritance made explicit).
std::vector<Diagnostic> lint_theory(const Theory& t, bool strict = false);

std::string diagnostic_str(const Diagnostic& d);

}  // namespace dtag

#endif  // DTAG_LINT_HPP_
