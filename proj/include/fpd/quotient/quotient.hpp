#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fpd/gf/matrix.hpp"
#include "fpd/groebner/groebner.hpp"

namespace fpd::quotient {

using groebner::GroebnerBasis;
using mpoly::Monomial;
using mpoly::Polynomial;

class NotZeroDimensional : public std::domain_error {
 public:
  NotZeroDimensional() : std::domain_error("ideal is not zero-dimensional") {}
};

/// Coordinates of an element of F_p[x]/I on the standard monomials.
using QuotientElement = gf::Vector;

/// True iff every variable has a pure power among the leading monomials.
/// The unit ideal counts as zero-dimensional (empty basis).
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Standard monomials of a zero-dimensional ideal, descending in the ring's
/// order, with the reducer they were derived from.
class QuotientBasis {
 public:
  QuotientBasis(GroebnerBasis gb, std::vector<Monomial> monomials);

  const GroebnerBasis& gb() const { return gb_; }
  const mpoly::RingPtr& ring() const { return gb_.ring(); }
  const gf::PrimeField& field() const { return gb_.ring()->field; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t dimension() const { return monomials_.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, mpoly::MonomialHash> index_;
};

/// Throws NotZeroDimensional unless is_zero_dimensional(gb).
QuotientBasis macaulay_basis(const GroebnerBasis& gb);

QuotientElement to_coords(const Polynomial& f, const QuotientBasis& qb);
/// The normal-form representative with the given coordinates.
Polynomial from_coords(std::span<const gf::Elem> coords, const QuotientBasis& qb);

QuotientElement multiply(std::span<const gf::Elem> a, std::span<const gf::Elem> b, const QuotientBasis& qb);
QuotientElement power(std::span<const gf::Elem> a, std::uint64_t e, const QuotientBasis& qb);
/// Coordinates of 1 (the zero vector for the unit ideal).
QuotientElement one(const QuotientBasis& qb);

/// Column j holds the coordinates of f · B_j.
gf::Matrix mult_matrix(const Polynomial& f, const QuotientBasis& qb);

/// Matrix of f ↦ f^p − f on the standard monomials: column j holds the
/// coordinates of B_j^p − B_j, powers taken by repeated squaring with a
/// normal-form reduction after every product.
gf::Matrix frobenius_matrix(const QuotientBasis& qb);

}  // namespace fpd::quotient
