#pragma once

#include <span>
#include <string>
#include <vector>

#include "fpd/mpoly/polynomial.hpp"

namespace fpd::groebner {

using mpoly::Polynomial;
using mpoly::RingPtr;

/// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
/// descending. The zero ideal has no elements; the unit ideal is [1].
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> polys)
      : ring_(std::move(ring)), polys_(std::move(polys)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  bool is_unit() const { return polys_.size() == 1 && polys_.front().is_constant(); }
  bool is_zero_ideal() const { return polys_.empty(); }

  /// Printed members; the zero ideal prints as ["0"].
  std::vector<std::string> to_strings() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return mpoly::same_ring(a.ring_, b.ring_) && a.polys_ == b.polys_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> polys_;
};

/// Buchberger's algorithm with the coprime-leading-term and chain criteria
/// and smallest-lcm pair selection, followed by full inter-reduction.
/// All inputs must live in `ring`; zero inputs are ignored.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring);

/// Same, after moving the generators into a ring with order `kind`.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring,
                         mpoly::OrderKind kind);

/// Full reduction of f by `divisors` (any nonzero polynomials): no term of
/// the result is divisible by a divisor's leading monomial.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

/// Canonical remainder modulo a reduced basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger criterion audit: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis);

/// No term of any member is divisible by another member's leading monomial,
/// and every member is monic.
bool is_reduced(const GroebnerBasis& gb);

}  // namespace fpd::groebner
