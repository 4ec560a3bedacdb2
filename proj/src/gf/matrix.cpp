#include "fpd/gf/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpd/gf/kernels.hpp"

namespace fpd::gf {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const Elem> values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RrefResult rref(const PrimeField& field, Matrix m) {
  const kernels::RowOps& ops = kernels::select(field.modulus());
  const Elem p = field.modulus();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(lead).begin());

    auto pivot_row = m.row(lead);
    const Elem inv = field.inv(pivot_row[col]);
    // Entries left of col are already zero in the pivot row.
    ops.scale(pivot_row.data() + col, inv, m.cols() - col, p);

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Elem factor = m(r, col);
      if (factor == 0) continue;
      ops.axpy(m.row(r).data() + col, pivot_row.data() + col, field.neg(factor),
               m.cols() - col, p);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const PrimeField& field, const Matrix& m) { return rref(field, m).rank(); }

std::vector<Vector> kernel_basis(const PrimeField& field, const Matrix& m) {
  const RrefResult rr = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = field.neg(rr.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const PrimeField& field, const Matrix& m) {
  const RrefResult rr = rref(field, m.transpose());
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < rr.rank(); ++i) {
    const auto row = rr.reduced.row(i);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  const kernels::RowOps& ops = kernels::select(field.modulus());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      ops.axpy(c.row(i).data(), b.row(k).data(), a(i, k), b.cols(), field.modulus());
  return c;
}

Vector apply(const PrimeField& field, const Matrix& m, std::span<const Elem> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  Vector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = field.add(acc, field.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Matrix shift_diagonal(const PrimeField& field, Matrix m, Elem lambda) {
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    m(i, i) = field.sub(m(i, i), lambda);
  return m;
}

}  // namespace fpd::gf
