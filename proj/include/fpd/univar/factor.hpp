#pragma once

#include <stdexcept>
#include <vector>

#include "fpd/primdec/primdec.hpp"

namespace fpd::univar {

using mpoly::Polynomial;

class ConstantPolynomial : public std::invalid_argument {
 public:
  ConstantPolynomial() : std::invalid_argument("cannot factor a constant polynomial") {}
};

/// f = leading_coefficient · Π factors. Factors are the generators of the
/// primary components of ⟨f⟩, i.e. powers of distinct irreducibles, monic
/// and sorted by (degree, printed form).
struct Factorization {
  Polynomial input;
  gf::Elem leading_coefficient;
  std::vector<Polynomial> factors;
  std::size_t t;
};

/// f must live in a one-variable ring. Runs the primary decomposition of
/// ⟨f⟩; each component is principal.
Factorization factor(const Polynomial& f, const primdec::Options& opts = {});

}  // namespace fpd::univar
