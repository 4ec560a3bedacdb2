#include "fpd/quotient/quotient.hpp"

#include <algorithm>
#include <limits>

namespace fpd::quotient {

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  const std::size_t n = gb.ring()->nvars();
  std::vector<bool> has_power(n, false);
  for (const auto& g : gb.polys()) {
    const int v = g.leading_monomial().pure_power_variable();
    if (v >= 0) has_power[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

QuotientBasis::QuotientBasis(GroebnerBasis gb, std::vector<Monomial> monomials)
    : gb_(std::move(gb)), monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> QuotientBasis::index_of(const Monomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool divisible_by_leading(const Monomial& m, const GroebnerBasis& gb) {
  return std::any_of(gb.polys().begin(), gb.polys().end(),
                     [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
}

// Standard monomials form an order ideal, so once a partial exponent
// vector is divisible every extension of it is too.
void enumerate(const GroebnerBasis& gb, const std::vector<unsigned>& bound, std::size_t var,
               std::vector<mpoly::Exponent>& exps, std::vector<Monomial>& out) {
  if (var == exps.size()) {
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = 0; e < bound[var]; ++e) {
    exps[var] = static_cast<mpoly::Exponent>(e);
    if (divisible_by_leading(Monomial(exps), gb)) break;
    enumerate(gb, bound, var + 1, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

QuotientBasis macaulay_basis(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) throw NotZeroDimensional();
  if (gb.is_unit()) return QuotientBasis(gb, {});
  const std::size_t n = gb.ring()->nvars();
  std::vector<unsigned> bound(n, std::numeric_limits<unsigned>::max());
  for (const auto& g : gb.polys()) {
    const Monomial& lm = g.leading_monomial();
    const int v = lm.pure_power_variable();
    if (v >= 0) bound[static_cast<std::size_t>(v)] = std::min<unsigned>(bound[static_cast<std::size_t>(v)], lm[v]);
  }
  std::vector<Monomial> monomials;
  std::vector<mpoly::Exponent> exps(n, 0);
  enumerate(gb, bound, 0, exps, monomials);
  const auto& order = gb.ring()->order;
  std::sort(monomials.begin(), monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return QuotientBasis(gb, std::move(monomials));
}

QuotientElement to_coords(const Polynomial& f, const QuotientBasis& qb) {
  QuotientElement coords(qb.dimension(), 0);
  const Polynomial nf = normal_form(f, qb.gb());
  for (const auto& t : nf.terms()) {
    const auto idx = qb.index_of(t.mono);
    // A normal form of a zero-dimensional reduced basis is supported on B.
    if (!idx) throw std::logic_error("normal form escaped the standard monomials");
    coords[*idx] = t.coeff;
  }
  return coords;
}

Polynomial from_coords(std::span<const gf::Elem> coords, const QuotientBasis& qb) {
  if (coords.size() != qb.dimension()) throw std::invalid_argument("coordinate length mismatch");
  std::vector<mpoly::Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) terms.push_back({coords[i], qb.monomials()[i]});
  return Polynomial::from_terms(qb.ring(), std::move(terms));
}

QuotientElement multiply(std::span<const gf::Elem> a, std::span<const gf::Elem> b, const QuotientBasis& qb) {
  return to_coords(from_coords(a, qb) * from_coords(b, qb), qb);
}

QuotientElement one(const QuotientBasis& qb) {
  return to_coords(Polynomial::constant(qb.ring(), 1), qb);
}

QuotientElement power(std::span<const gf::Elem> a, std::uint64_t e, const QuotientBasis& qb) {
  Polynomial result = normal_form(Polynomial::constant(qb.ring(), 1), qb.gb());
  Polynomial base = from_coords(a, qb);
  while (e != 0) {
    if (e & 1) result = normal_form(result * base, qb.gb());
    e >>= 1;
    if (e != 0) base = normal_form(base * base, qb.gb());
  }
  return to_coords(result, qb);
}

gf::Matrix mult_matrix(const Polynomial& f, const QuotientBasis& qb) {
  const std::size_t n = qb.dimension();
  gf::Matrix m(n, n);
  const Polynomial nf = normal_form(f, qb.gb());
  for (std::size_t j = 0; j < n; ++j)
    m.set_column(j, to_coords(nf.mul_term(1, qb.monomials()[j]), qb));
  return m;
}

gf::Matrix frobenius_matrix(const QuotientBasis& qb) {
  const std::size_t n = qb.dimension();
  const gf::PrimeField& field = qb.field();
  gf::Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    QuotientElement unit(n, 0);
    unit[j] = 1;
    QuotientElement col = power(unit, field.modulus(), qb);
    col[j] = field.sub(col[j], 1);
    m.set_column(j, col);
  }
  return m;
}

}  // namespace fpd::quotient
