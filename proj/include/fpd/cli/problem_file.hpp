#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpd/groebner/ideal.hpp"

namespace fpd::cli {

/// Malformed problem file. Line and column are 1-based; column 0 means the
/// whole line.
class ProblemError : public std::runtime_error {
 public:
  ProblemError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(format(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line_;
  std::size_t column_;
};

/// Line-oriented input, `#` starts a comment:
///
///     field 5
///     vars x y z
///     order lex
///     ideal
///     y^2 - x*z
///     ...
///
/// Variables are listed from greatest to least.
struct ProblemFile {
  std::uint64_t p = 0;
  std::vector<std::string> vars;
  mpoly::OrderKind order = mpoly::OrderKind::kLex;
  struct Line {
    std::size_t number;
    std::string text;
  };
  std::vector<Line> generators;
};

ProblemFile read_problem(std::istream& in);

/// Builds the ring and parses every generator. Parse failures become
/// ProblemErrors pointing at the generator's line.
groebner::Ideal build_ideal(const ProblemFile& problem);

std::string order_name(mpoly::OrderKind kind);

}  // namespace fpd::cli
