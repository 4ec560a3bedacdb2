#pragma once

// Dense univariate polynomials over F_p, coefficient i at index i. Only
// what eigenvalue extraction for large moduli needs.

#include <cstdint>
#include <vector>

#include "fpd/gf/field.hpp"
#include "fpd/gf/matrix.hpp"

namespace fpd::gf {

using DensePoly = std::vector<Elem>;

void trim(DensePoly& a);
/// -1 for the zero polynomial.
int degree(const DensePoly& a);

DensePoly poly_sub(const PrimeField& f, DensePoly a, const DensePoly& b);
DensePoly poly_mul(const PrimeField& f, const DensePoly& a, const DensePoly& b);
/// Remainder of a modulo nonzero b.
DensePoly poly_rem(const PrimeField& f, DensePoly a, const DensePoly& b);
DensePoly poly_div(const PrimeField& f, DensePoly a, const DensePoly& b);
/// Monic gcd; gcd(0, 0) = 0.
DensePoly poly_gcd(const PrimeField& f, DensePoly a, DensePoly b);
DensePoly poly_pow_mod(const PrimeField& f, DensePoly base, std::uint64_t e, const DensePoly& m);
Elem poly_eval(const PrimeField& f, const DensePoly& a, Elem x);

/// Minimal polynomial of a square matrix, monic, from the first linear
/// dependency among I, M, M^2, ...
DensePoly minimal_polynomial(const PrimeField& f, const Matrix& m);

/// The distinct roots of a nonzero polynomial lying in F_p, ascending.
/// Isolates the split part via gcd with x^p - x, then separates roots with
/// deterministic shifts (x + a)^((p-1)/2) - 1.
std::vector<Elem> roots_in_field(const PrimeField& f, const DensePoly& a);

}  // namespace fpd::gf
