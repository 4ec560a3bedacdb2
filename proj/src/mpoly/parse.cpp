#include "fpd/mpoly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace fpd::mpoly {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      advance();
    }
    terms.push_back(term(negate));
    for (skip_space(); !at_end(); skip_space()) {
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      advance();
      terms.push_back(term(op == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term term(bool negate) {
    const gf::PrimeField& field = ring_->field;
    Term t{negate ? field.neg(1) : gf::Elem{1}, Monomial(ring_->nvars())};
    t.coeff = field.mul(t.coeff, factor(t.mono));
    for (skip_space(); !at_end() && peek() == '*'; skip_space()) {
      advance();
      t.coeff = field.mul(t.coeff, factor(t.mono));
    }
    return t;
  }

  // Returns the coefficient contributed by the factor; variables multiply
  // into `mono`.
  gf::Elem factor(Monomial& mono) {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return integer_mod_p();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      const std::string name = identifier();
      const auto& vars = ring_->vars;
      const auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) fail_at(start, "unknown variable '" + name + "'");
      Exponent power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        advance();
        skip_space();
        power = exponent();
      }
      try {
        mono = mono * Monomial::variable(ring_->nvars(), static_cast<std::size_t>(it - vars.begin()), power);
      } catch (const ExponentOverflow&) {
        fail_at(start, "exponent overflow");
      }
      return 1;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  gf::Elem integer_mod_p() {
    const gf::PrimeField& field = ring_->field;
    std::uint64_t acc = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = (acc * 10 + static_cast<unsigned>(peek() - '0')) % field.modulus();
      advance();
    }
    return static_cast<gf::Elem>(acc);
  }

  Exponent exponent() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    const std::size_t start = pos_;
    std::uint64_t acc = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = acc * 10 + static_cast<unsigned>(peek() - '0');
      if (acc > std::numeric_limits<Exponent>::max()) fail_at(start, "exponent too large");
      advance();
    }
    return static_cast<Exponent>(acc);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(pos + 1, msg);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace fpd::mpoly
