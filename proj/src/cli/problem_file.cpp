#include "fpd/cli/problem_file.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "fpd/mpoly/parse.hpp"

namespace fpd::cli {

std::string ProblemError::format(std::size_t line, std::size_t column, const std::string& message) {
  if (line == 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

std::string order_name(mpoly::OrderKind kind) { return kind == mpoly::OrderKind::kLex ? "lex" : "grevlex"; }

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ProblemFile read_problem(std::istream& in) {
  ProblemFile problem;
  bool have_field = false, have_vars = false, in_ideal = false;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    if (in_ideal) {
      problem.generators.push_back({number, line});
      continue;
    }
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    if (keyword == "field") {
      std::string value, extra;
      words >> value;
      std::uint64_t p = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), p);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() || (words >> extra))
        throw ProblemError(number, 0, "expected 'field <prime>'");
      problem.p = p;
      have_field = true;
    } else if (keyword == "vars") {
      for (std::string v; words >> v;) problem.vars.push_back(v);
      if (problem.vars.empty()) throw ProblemError(number, 0, "expected at least one variable");
      have_vars = true;
    } else if (keyword == "order") {
      std::string value, extra;
      words >> value;
      if (value == "lex") {
        problem.order = mpoly::OrderKind::kLex;
      } else if (value == "grevlex") {
        problem.order = mpoly::OrderKind::kGrevlex;
      } else {
        throw ProblemError(number, 0, "unknown order '" + value + "' (expected lex or grevlex)");
      }
      if (words >> extra) throw ProblemError(number, 0, "trailing text after order");
    } else if (keyword == "ideal") {
      std::string extra;
      if (words >> extra) throw ProblemError(number, 0, "generators go on the lines after 'ideal'");
      in_ideal = true;
    } else {
      throw ProblemError(number, 0, "unknown directive '" + keyword + "'");
    }
  }
  if (!have_field) throw ProblemError(number, 0, "missing 'field' line");
  if (!have_vars) throw ProblemError(number, 0, "missing 'vars' line");
  if (!in_ideal || problem.generators.empty()) throw ProblemError(number, 0, "missing ideal generators");
  return problem;
}

groebner::Ideal build_ideal(const ProblemFile& problem) {
  const mpoly::RingPtr ring = mpoly::make_ring(problem.p, problem.vars, problem.order);
  std::vector<mpoly::Polynomial> gens;
  for (const auto& line : problem.generators) {
    try {
      gens.push_back(mpoly::parse_poly(line.text, ring));
    } catch (const mpoly::ParseError& e) {
      throw ProblemError(line.number, e.column(), e.message());
    }
  }
  return groebner::Ideal(ring, std::move(gens));
}

}  // namespace fpd::cli
