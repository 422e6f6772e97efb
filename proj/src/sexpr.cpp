#include "vsqe/sexpr.hpp"

#include <cctype>

namespace vsqe {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string_view SExpr::head() const {
  if (kind != Kind::List || items.empty() || !items.front().is_symbol()) return {};
  return items.front().text;
}

void SExpr::fail(const std::string& message) const { throw ParseError(message, line, column); }

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return out;
      out.push_back(read());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  char peek() const { return text_[pos_]; }

  char advance() {
    char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return ch;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == ';') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  SExpr read() {
    SExpr node;
    node.line = line_;
    node.column = column_;
    const char ch = peek();
    if (ch == '(') {
      advance();
      node.kind = SExpr::Kind::List;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '('", node.line, node.column);
        if (peek() == ')') {
          advance();
          return node;
        }
        node.items.push_back(read());
      }
    }
    if (ch == ')') fail("unexpected ')'");
    if (ch == '"') {
      advance();
      node.kind = SExpr::Kind::String;
      for (;;) {
        if (pos_ >= text_.size()) throw ParseError("unterminated string", node.line, node.column);
        char c = advance();
        if (c == '"') {
          if (pos_ < text_.size() && peek() == '"') {
            node.text.push_back(advance());
            continue;
          }
          return node;
        }
        node.text.push_back(c);
      }
    }
    if (ch == '|') {
      advance();
      for (;;) {
        if (pos_ >= text_.size()) throw ParseError("unterminated |symbol|", node.line, node.column);
        char c = advance();
        if (c == '|') return node;
        node.text.push_back(c);
      }
    }
    while (pos_ < text_.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';' || c == '"')
        break;
      node.text.push_back(advance());
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).read_all(); }

}  // namespace vsqe
