#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fpd/gf/field.hpp"

namespace fpd::gf {

using Vector = std::vector<Elem>;

/// Dense row-major matrix of residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  /// Builds a matrix from explicit rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Elem> values);

  bool is_zero() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Rows past the rank are zero; pivots are
/// strictly increasing column indices with pivot entries equal to one.
RrefResult rref(const PrimeField& field, Matrix m);

std::size_t rank(const PrimeField& field, const Matrix& m);

/// Basis of {v : m v = 0}. For each free column f the basis vector has a
/// one at f, zeros at the other free columns, and is ordered by f.
std::vector<Vector> kernel_basis(const PrimeField& field, const Matrix& m);

/// Basis of the column space, as the nonzero rows of rref(m^T).
std::vector<Vector> image_basis(const PrimeField& field, const Matrix& m);

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b);
Vector apply(const PrimeField& field, const Matrix& m, std::span<const Elem> v);

/// m - lambda * I for square m.
Matrix shift_diagonal(const PrimeField& field, Matrix m, Elem lambda);

}  // namespace fpd::gf
