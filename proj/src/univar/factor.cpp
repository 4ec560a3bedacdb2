#include "fpd/univar/factor.hpp"

#include <algorithm>

namespace fpd::univar {

Factorization factor(const Polynomial& f, const primdec::Options& opts) {
  if (f.ring()->nvars() != 1) throw std::invalid_argument("factor expects a univariate ring");
  if (f.is_constant()) throw ConstantPolynomial();

  const primdec::Decomposition d = primdec::primary_decomposition(groebner::Ideal(f.ring(), {f}), opts);
  std::vector<Polynomial> factors;
  for (const auto& c : d.components) {
    const groebner::GroebnerBasis gb = c.groebner_basis();
    if (gb.size() != 1) throw std::logic_error("univariate component is not principal");
    factors.push_back(gb.polys().front());
  }
  std::sort(factors.begin(), factors.end(), [](const Polynomial& a, const Polynomial& b) {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return mpoly::to_string(a) < mpoly::to_string(b);
  });
  return Factorization{f, f.leading_coeff(), std::move(factors), d.t()};
}

}  // namespace fpd::univar
