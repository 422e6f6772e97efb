#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vsqe {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SExpr {
  enum class Kind { Symbol, String, List };

  Kind kind = Kind::Symbol;
  std::string text;            // Symbol / String payload
  std::vector<SExpr> items;    // List elements
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_list() const { return kind == Kind::List; }
  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  // Head symbol of a non-empty list, "" otherwise.
  std::string_view head() const;

  [[noreturn]] void fail(const std::string& message) const;
};

/// Reads every top-level s-expression. `;` starts a line comment; `"..."`
/// strings and `|...|` quoted symbols are supported.
std::vector<SExpr> read_sexprs(std::string_view text);

}  // namespace vsqe
