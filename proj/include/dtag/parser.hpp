#ifndef DTAG_PARSER_HPP_
#define DTAG_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtag/theory.hpp"

namespace dtag {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Parses one source text into a Theory.
///
/// A block is `NodeName:` followed by one or more `path ==|= rvalue`
/// clauses and a terminating '.'. '%' starts a comment to end of line;
/// whitespace is otherwise insignificant. Clauses have no terminator of
/// their own: a '<' that opens a path followed by '==' or '=' begins the
/// next clause, anything else after a descriptor extends the rvalue
/// sequence.
///
/// Errors (all ParseError with 1-based line/column): syntax errors,
/// a duplicate path within a node, a repeated node block.
Theory parse_theory(std::string_view source);

/// Reads and parses `paths` in order and merges them into one Theory.
/// Parse errors are rethrown with the offending file name prefixed;
/// cross-file duplicate (node, path) surfaces as TheoryError.
Theory load_theory(const std::vector<std::string>& paths);

}  // namespace dtag

#endif  // DTAG_PARSER_HPP_
