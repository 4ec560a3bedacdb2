#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fpd/gf/matrix.hpp"
#include "fpd/quotient/quotient.hpp"

namespace fpd::idem {

using quotient::QuotientBasis;
using quotient::QuotientElement;

/// A product of two subalgebra elements left the subalgebra.
class ClosureViolation : public std::logic_error {
 public:
  explicit ClosureViolation(const std::string& what) : std::logic_error(what) {}
};

/// The algebra being split has a nonzero nilpotent, so it is not a product
/// of copies of F_p.
class NilpotentElement : public std::logic_error {
 public:
  explicit NilpotentElement(const std::string& what) : std::logic_error(what) {}
};

/// Subspace of F_p[x]/I closed under multiplication, stored as RREF rows of
/// ambient coordinates.
class Subalgebra {
 public:
  Subalgebra(std::shared_ptr<const QuotientBasis> ambient, std::vector<gf::Vector> spanning);

  const QuotientBasis& ambient() const { return *ambient_; }
  const std::shared_ptr<const QuotientBasis>& ambient_ptr() const { return ambient_; }
  const gf::PrimeField& field() const { return ambient_->field(); }

  std::size_t dimension() const { return pivots_.size(); }
  const gf::Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  gf::Vector element(std::size_t i) const;

  /// Coefficients of v on the basis rows, or nullopt when v is outside.
  std::optional<gf::Vector> coordinates(std::span<const gf::Elem> v) const;
  bool contains(std::span<const gf::Elem> v) const { return coordinates(v).has_value(); }
  /// Σ coeffs[i] · element(i).
  gf::Vector combine(std::span<const gf::Elem> coeffs) const;

  /// Matrix of g ↦ w·g on this subalgebra in basis coordinates (column i
  /// is the image of element i). Throws ClosureViolation.
  gf::Matrix restricted_mult(std::span<const gf::Elem> w) const;

  /// Every pairwise product of basis elements lies in the span.
  bool is_closed() const;

 private:
  std::shared_ptr<const QuotientBasis> ambient_;
  gf::Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Ker(f ↦ f^p − f) as a subalgebra. Its dimension is the number of
/// primary components.
Subalgebra invariant_subspace(std::shared_ptr<const QuotientBasis> qb);

struct SplitOptions {
  /// Moduli below this find eigenvalues by scanning every λ in F_p; larger
  /// ones take roots of the minimal polynomial instead.
  std::uint64_t eigen_scan_limit = std::uint64_t{1} << 16;
};

/// Eigenvalues in F_p of a square matrix, ascending.
std::vector<gf::Elem> eigenvalues(const gf::PrimeField& field, const gf::Matrix& m,
                                  const SplitOptions& opts = {});

/// One splitting step: picks the first basis element w whose multiplication
/// map is not scalar and returns the eigenspaces of that map, in order of
/// eigenvalue. Returns {w} unchanged when every element acts as a scalar.
std::vector<Subalgebra> split_once(const Subalgebra& w, const SplitOptions& opts = {});

/// Splits a reduced subalgebra into one-dimensional pieces and returns the
/// normalized idempotent of each (h with h² = h), sorted by the printed
/// normal-form representative.
std::vector<QuotientElement> split_algebra(const Subalgebra& v, const SplitOptions& opts = {});

}  // namespace fpd::idem
