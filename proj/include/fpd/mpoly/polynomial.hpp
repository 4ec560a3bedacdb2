#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fpd/gf/field.hpp"
#include "fpd/mpoly/monomial.hpp"

namespace fpd::mpoly {

/// F_p[x_1..x_n] with a fixed monomial order.
struct Ring {
  gf::PrimeField field;
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Validates names (nonempty, distinct identifiers) and the modulus.
RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars, OrderKind kind = OrderKind::kLex);

/// Same variables, different order.
RingPtr with_order(const RingPtr& ring, OrderKind kind);

/// Lex ring on (t, x_1..x_n) where t is a fresh variable greater than all
/// others. The name only matters for printing and never collides with an
/// existing variable.
RingPtr with_leading_variable(const RingPtr& ring, std::string_view preferred_name);

struct Term {
  gf::Elem coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero coefficients, distinct monomials, strictly
/// descending in the ring's order. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, gf::Elem c);
  static Polynomial monomial(RingPtr ring, gf::Elem c, Monomial m);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const gf::PrimeField& field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Zero or a lone constant term.
  bool is_constant() const;
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  gf::Elem leading_coeff() const { return terms_.front().coeff; }
  /// Everything but the leading term.
  Polynomial tail() const;
  /// Highest exponent of variable `var` over all terms.
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(gf::Elem c) const;
  Polynomial mul_term(gf::Elem c, const Monomial& m) const;
  /// this - c * m * g, merged in one pass.
  Polynomial sub_mul_term(gf::Elem c, const Monomial& m, const Polynomial& g) const;
  /// Scaled so the leading coefficient is one; zero stays zero.
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  /// Reinterprets the polynomial in another ring with the same variable
  /// count and modulus, re-sorting under the target order.
  Polynomial in_ring(RingPtr target) const;
  /// Maps into a ring made by with_leading_variable (exponent 0 for t).
  Polynomial lift_to(RingPtr extended) const;
  /// Inverse of lift_to; throws std::invalid_argument if t occurs.
  Polynomial drop_leading_variable(RingPtr base) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Descending terms, `^` powers, explicit `*`, coefficients in 0..p-1,
/// no spaces: e.g. "x^3+2*x^2+1". The zero polynomial prints as "0".
std::string to_string(const Polynomial& f);

}  // namespace fpd::mpoly
