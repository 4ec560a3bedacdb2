#pragma once

// Brute-force reference implementations used only by the test suites.
// They share field arithmetic and the quotient multiplication with the
// engine but nothing else: no Groebner computation, no linear algebra.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpd/groebner/ideal.hpp"
#include "fpd/idem/idem.hpp"

namespace fpd::oracle {

struct OracleConfig {
  /// Largest subalgebra size p^dim enumerated.
  std::uint64_t max_elements = 3125;
  /// Largest p^deg for univariate trial division.
  std::uint64_t max_univariate_search = 2187;
};

class BoundExceeded : public std::length_error {
 public:
  BoundExceeded() : std::length_error("oracle enumeration bound exceeded") {}
};

/// Enumerates every element of v, keeps the nonzero idempotents and returns
/// the minimal ones under e ≤ f ⇔ e·f = e. Sorted by printed normal form.
std::vector<quotient::QuotientElement> primitive_idempotents_bruteforce(const idem::Subalgebra& v,
                                                                       const OracleConfig& cfg = {});

/// (irreducible, multiplicity) pairs by trial division with monic
/// candidates of ascending degree; sorted by (degree, printed form).
std::vector<std::pair<mpoly::Polynomial, unsigned>> factor_bruteforce(const mpoly::Polynomial& f,
                                                                     const OracleConfig& cfg = {});

/// ⋂ ⟨x_1 − a_1, …, x_n − a_n⟩ over the given points, generated by the
/// products of one linear form per point (the maximal ideals of distinct
/// points are pairwise comaximal, so product equals intersection).
groebner::Ideal point_ideal(const mpoly::RingPtr& ring, const std::vector<std::vector<gf::Elem>>& points);

/// ⟨x_1 − a_1, …, x_n − a_n⟩.
groebner::Ideal maximal_ideal(const mpoly::RingPtr& ring, const std::vector<gf::Elem>& point);

}  // namespace fpd::oracle
