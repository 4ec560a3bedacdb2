#include "fpd/idem/idem.hpp"

#include <algorithm>

#include "fpd/gf/dense_poly.hpp"

namespace fpd::idem {

Subalgebra::Subalgebra(std::shared_ptr<const QuotientBasis> ambient, std::vector<gf::Vector> spanning)
    : ambient_(std::move(ambient)) {
  const std::size_t n = ambient_->dimension();
  gf::RrefResult rr = gf::rref(ambient_->field(), gf::Matrix::from_rows(spanning, n));
  basis_ = gf::Matrix(rr.rank(), n);
  for (std::size_t i = 0; i < rr.rank(); ++i)
    std::copy(rr.reduced.row(i).begin(), rr.reduced.row(i).end(), basis_.row(i).begin());
  pivots_ = std::move(rr.pivots);
}

gf::Vector Subalgebra::element(std::size_t i) const {
  const auto row = basis_.row(i);
  return {row.begin(), row.end()};
}

std::optional<gf::Vector> Subalgebra::coordinates(std::span<const gf::Elem> v) const {
  const gf::PrimeField& f = field();
  gf::Vector coeffs(dimension());
  gf::Vector residual(v.begin(), v.end());
  for (std::size_t i = 0; i < dimension(); ++i) {
    const gf::Elem c = residual[pivots_[i]];
    coeffs[i] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k < residual.size(); ++k)
      residual[k] = f.sub(residual[k], f.mul(c, basis_(i, k)));
  }
  if (std::any_of(residual.begin(), residual.end(), [](gf::Elem e) { return e != 0; }))
    return std::nullopt;
  return coeffs;
}

gf::Vector Subalgebra::combine(std::span<const gf::Elem> coeffs) const {
  const gf::PrimeField& f = field();
  gf::Vector out(ambient_->dimension(), 0);
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(out[k], f.mul(coeffs[i], basis_(i, k)));
  }
  return out;
}

gf::Matrix Subalgebra::restricted_mult(std::span<const gf::Elem> w) const {
  const std::size_t d = dimension();
  gf::Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto image = coordinates(quotient::multiply(w, element(i), *ambient_));
    if (!image) throw ClosureViolation("product left the subalgebra");
    m.set_column(i, *image);
  }
  return m;
}

bool Subalgebra::is_closed() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i; j < dimension(); ++j)
      if (!contains(quotient::multiply(element(i), element(j), *ambient_))) return false;
  return true;
}

Subalgebra invariant_subspace(std::shared_ptr<const QuotientBasis> qb) {
  auto kernel = gf::kernel_basis(qb->field(), quotient::frobenius_matrix(*qb));
  return Subalgebra(std::move(qb), std::move(kernel));
}

std::vector<gf::Elem> eigenvalues(const gf::PrimeField& field, const gf::Matrix& m,
                                  const SplitOptions& opts) {
  if (field.modulus() < opts.eigen_scan_limit) {
    std::vector<gf::Elem> out;
    std::size_t found_dim = 0;
    for (gf::Elem lambda = 0; lambda < field.modulus() && found_dim < m.rows(); ++lambda) {
      const std::size_t nullity = m.rows() - gf::rank(field, gf::shift_diagonal(field, m, lambda));
      if (nullity == 0) continue;
      out.push_back(lambda);
      found_dim += nullity;
    }
    return out;
  }
  return gf::roots_in_field(field, gf::minimal_polynomial(field, m));
}

namespace {

bool is_scalar(const gf::Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if ((r == c && m(r, c) != m(0, 0)) || (r != c && m(r, c) != 0)) return false;
  return true;
}

QuotientElement normalize(const Subalgebra& line) {
  const gf::PrimeField& f = line.field();
  const gf::Vector g = line.element(0);
  const auto k = line.coordinates(quotient::multiply(g, g, line.ambient()));
  if (!k) throw ClosureViolation("square left a one-dimensional subalgebra");
  if ((*k)[0] == 0) throw NilpotentElement("one-dimensional piece squares to zero");
  const gf::Elem scale = f.inv((*k)[0]);
  gf::Vector h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f.mul(scale, g[i]);
  return h;
}

void split_into(const Subalgebra& w, const SplitOptions& opts, std::vector<QuotientElement>& out) {
  if (w.dimension() == 0) return;
  if (w.dimension() == 1) {
    out.push_back(normalize(w));
    return;
  }
  const auto parts = split_once(w, opts);
  if (parts.size() < 2) throw NilpotentElement("subalgebra of dimension > 1 does not split");
  for (const auto& part : parts) split_into(part, opts, out);
}

}  // namespace

std::vector<Subalgebra> split_once(const Subalgebra& w, const SplitOptions& opts) {
  const gf::PrimeField& f = w.field();
  for (std::size_t i = 0; i < w.dimension(); ++i) {
    const gf::Matrix m = w.restricted_mult(w.element(i));
    if (is_scalar(m)) continue;
    std::vector<Subalgebra> parts;
    std::size_t total = 0;
    for (gf::Elem lambda : eigenvalues(f, m, opts)) {
      std::vector<gf::Vector> rows;
      for (const auto& v : gf::kernel_basis(f, gf::shift_diagonal(f, m, lambda))) rows.push_back(w.combine(v));
      total += rows.size();
      parts.emplace_back(w.ambient_ptr(), std::move(rows));
    }
    // Elements with w^p = w act diagonalizably; a shortfall means nilpotents.
    if (total != w.dimension()) throw NilpotentElement("multiplication map is not diagonalizable over F_p");
    return parts;
  }
  return {w};
}

std::vector<QuotientElement> split_algebra(const Subalgebra& v, const SplitOptions& opts) {
  std::vector<QuotientElement> out;
  split_into(v, opts, out);
  std::vector<std::pair<std::string, QuotientElement>> keyed;
  keyed.reserve(out.size());
  for (auto& h : out) keyed.emplace_back(mpoly::to_string(quotient::from_coords(h, v.ambient())), std::move(h));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [key, h] : keyed) out.push_back(std::move(h));
  return out;
}

}  // namespace fpd::idem
