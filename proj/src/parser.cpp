#include "dtag/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace dtag {

namespace {

enum class Tok { NodeWord, AtomWord, LAngle, RAngle, Colon, EqEq, Eq, Dot, Quote, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::NodeWord: return "node name";
    case Tok::AtomWord: return "atom";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::Colon: return "':'";
    case Tok::EqEq: return "'=='";
    case Tok::Eq: return "'='";
    case Tok::Dot: return "'.'";
    case Tok::Quote: return "'\"'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      const int line = line_, col = col_;
      if (eof()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = peek();
      if (c == '<') {
        out.push_back({Tok::LAngle, "<", line, col});
        advance();
      } else if (c == '>') {
        out.push_back({Tok::RAngle, ">", line, col});
        advance();
      } else if (c == ':') {
        out.push_back({Tok::Colon, ":", line, col});
        advance();
      } else if (c == '.') {
        out.push_back({Tok::Dot, ".", line, col});
        advance();
      } else if (c == '"') {
        out.push_back({Tok::Quote, "\"", line, col});
        advance();
      } else if (c == '=') {
        advance();
        if (!eof() && peek() == '=') {
          advance();
          out.push_back({Tok::EqEq, "==", line, col});
        } else {
          out.push_back({Tok::Eq, "=", line, col});
        }
      } else if (std::isalnum(static_cast<unsigned char>(c))) {
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' ||
                          peek() == '+')) {
          word.push_back(peek());
          advance();
        }
        if (std::isupper(static_cast<unsigned char>(word.front()))) {
          out.push_back({Tok::NodeWord, word, line, col});
        } else {
          if (word.find('+') != std::string::npos) {
            throw ParseError(line, col, "'+' is not allowed in atoms: '" + word + "'");
          }
          out.push_back({Tok::AtomWord, word, line, col});
        }
      } else {
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '%') {
        while (!eof() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Theory run() {
    Theory t;
    std::map<std::string, int> block_lines;
    while (peek().kind != Tok::End) {
      const Token& name_tok = expect(Tok::NodeWord, "expected a node name to start a block");
      auto [it, fresh] = block_lines.emplace(name_tok.text, name_tok.line);
      if (!fresh) {
        throw ParseError(name_tok.line, name_tok.column,
                         "duplicate node '" + name_tok.text + "' (previous block at line " +
                             std::to_string(it->second) + ")");
      }
      expect(Tok::Colon, "expected ':' after node name");
      const NodeName node(name_tok.text);

      bool any = false;
      while (peek().kind != Tok::Dot) {
        parse_clause(t, node);
        any = true;
      }
      if (!any) {
        throw ParseError(peek().line, peek().column,
                         "node '" + name_tok.text + "' has no sentences");
      }
      expect(Tok::Dot, "expected '.' to close the block");
    }
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  const Token& expect(Tok kind, const std::string& why) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw ParseError(t.line, t.column, why + " (found " + tok_name(t.kind) + ")");
    }
    return take();
  }

  Path parse_path(const std::string& why) {
    expect(Tok::LAngle, why);
    std::vector<Atom> attrs;
    while (peek().kind == Tok::AtomWord) {
      attrs.emplace_back(take().text);
    }
    expect(Tok::RAngle, "expected '>' to close the path");
    return Path(std::move(attrs));
  }

  void parse_clause(Theory& t, const NodeName& node) {
    const Token& start = peek();
    Path lhs = parse_path("expected '<' to start a path");
    bool definitional;
    if (peek().kind == Tok::EqEq) {
      take();
      definitional = true;
    } else if (peek().kind == Tok::Eq) {
      take();
      definitional = false;
    } else {
      throw ParseError(peek().line, peek().column,
                       std::string("expected '==' or '=' after the path (found ") +
                           tok_name(peek().kind) + ")");
    }

    Rvalue rv;
    rv.items.push_back(parse_descriptor());
    while (more_rvalue_items()) {
      rv.items.push_back(parse_descriptor());
    }

    if (t.exact(node, lhs)) {
      throw ParseError(start.line, start.column,
                       "duplicate path " + lhs.str() + " at node " + node.str());
    }
    t.add(Sentence{node, std::move(lhs), std::move(rv), definitional,
                   SourceLocation{start.line, start.column}});
  }

  // After at least one descriptor: a '.' ends the block; a '<' opening a
  // path that is followed by '==' or '=' starts the next clause; anything
  // else continues the rvalue sequence.
  bool more_rvalue_items() {
    switch (peek().kind) {
      case Tok::Dot:
      case Tok::End:
        return false;
      case Tok::LAngle: {
        std::size_t i = 1;
        while (peek(i).kind == Tok::AtomWord) ++i;
        if (peek(i).kind != Tok::RAngle) return true;  // malformed; let the descriptor parser report it
        const Tok after = peek(i + 1).kind;
        return after != Tok::EqEq && after != Tok::Eq;
      }
      default:
        return true;
    }
  }

  Descriptor parse_descriptor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::AtomWord:
        return AtomValue{Atom(take().text)};
      case Tok::LAngle:
        return LocalPathRef{parse_path("expected '<'")};
      case Tok::NodeWord: {
        NodeName node(take().text);
        if (peek().kind == Tok::Colon) {
          take();
          Path p = parse_path("expected '<' after ':' in a node:path descriptor");
          return LocalNodePathRef{std::move(node), std::move(p)};
        }
        return LocalNodeRef{std::move(node)};
      }
      case Tok::Quote: {
        take();
        Descriptor inner = parse_quoted_body();
        expect(Tok::Quote, "expected closing '\"'");
        return inner;
      }
      default:
        throw ParseError(t.line, t.column,
                         std::string("expected a value descriptor (found ") + tok_name(t.kind) +
                             ")");
    }
  }

  Descriptor parse_quoted_body() {
    const Token& t = peek();
    if (t.kind == Tok::LAngle) {
      return GlobalPathRef{parse_path("expected '<'")};
    }
    if (t.kind == Tok::NodeWord) {
      NodeName node(take().text);
      if (peek().kind == Tok::Colon) {
        take();
        Path p = parse_path("expected '<' after ':' in a quoted node:path");
        return GlobalNodePathRef{std::move(node), std::move(p)};
      }
      return GlobalNodeRef{std::move(node)};
    }
    throw ParseError(t.line, t.column,
                     std::string("expected a node name or path inside quotes (found ") +
                         tok_name(t.kind) + ")");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Theory parse_theory(std::string_view source) {
  Lexer lexer(source);
  Parser parser(lexer.run());
  return parser.run();
}

Theory load_theory(const std::vector<std::string>& paths) {
  Theory merged;
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      merged.merge(parse_theory(buf.str()));
    } catch (const ParseError& e) {
      throw std::runtime_error(path + ":" + e.what());
    } catch (const TheoryError& e) {
      throw std::runtime_error(path + ": " + e.what());
    }
  }
  return merged;
}

}  // namespace dtag
