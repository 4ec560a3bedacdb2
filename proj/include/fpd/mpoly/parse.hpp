#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fpd/mpoly/polynomial.hpp"

namespace fpd::mpoly {

/// Syntax error or unknown variable; `column` is 1-based within the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : std::runtime_error("column " + std::to_string(column) + ": " + message),
        column_(column),
        message_(message) {}

  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t column_;
  std::string message_;
};

/// Grammar (whitespace insignificant):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer | variable ['^' integer]
/// Integer literals of any length are reduced modulo p.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace fpd::mpoly
