#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fpd::oracle {

using mpoly::Polynomial;
using quotient::QuotientElement;

std::vector<QuotientElement> primitive_idempotents_bruteforce(const idem::Subalgebra& v, const OracleConfig& cfg) {
  const std::uint64_t p = v.field().modulus();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    count *= p;
    if (count > cfg.max_elements) throw BoundExceeded();
  }
  const auto& qb = v.ambient();
  const auto is_zero = [](const QuotientElement& e) {
    return std::all_of(e.begin(), e.end(), [](gf::Elem c) { return c == 0; });
  };

  std::vector<QuotientElement> idempotents;
  std::vector<gf::Elem> digits(v.dimension(), 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t rest = n;
    for (auto& d : digits) {
      d = static_cast<gf::Elem>(rest % p);
      rest /= p;
    }
    const QuotientElement e = v.combine(digits);
    if (is_zero(e)) continue;
    if (quotient::multiply(e, e, qb) == e) idempotents.push_back(e);
  }

  std::vector<std::pair<std::string, QuotientElement>> primitive;
  for (const auto& e : idempotents) {
    bool minimal = true;
    for (const auto& f : idempotents) {
      if (f == e) continue;
      if (quotient::multiply(e, f, qb) == f) {
        minimal = false;  // f sits strictly below e
        break;
      }
    }
    if (minimal) primitive.emplace_back(mpoly::to_string(quotient::from_coords(e, qb)), e);
  }
  std::sort(primitive.begin(), primitive.end());
  std::vector<QuotientElement> out;
  for (auto& [key, e] : primitive) out.push_back(std::move(e));
  return out;
}

namespace {

// Dense univariate arithmetic, coefficient i at index i, kept separate from
// the engine's own helpers.
using Dense = std::vector<std::uint64_t>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::logic_error("no inverse");
}

// Returns true and replaces a by a / b when b divides a.
bool divide_exact(Dense& a, const Dense& b, std::uint64_t p) {
  Dense r = a;
  const std::size_t db = b.size() - 1;
  if (r.size() < b.size()) return false;
  Dense q(r.size() - db, 0);
  const std::uint64_t lead_inv = inverse(b.back(), p);
  for (std::size_t k = r.size(); k-- > db;) {
    const std::uint64_t c = r[k] * lead_inv % p;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = (r[k - db + i] + p * p - c * b[i] % p) % p;
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  a = std::move(q);
  return true;
}

Polynomial to_poly(const Dense& a, const mpoly::RingPtr& ring) {
  std::vector<mpoly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      terms.push_back({static_cast<gf::Elem>(a[i]), mpoly::Monomial::variable(1, 0, static_cast<mpoly::Exponent>(i))});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

std::vector<std::pair<Polynomial, unsigned>> factor_bruteforce(const Polynomial& f, const OracleConfig& cfg) {
  if (f.ring()->nvars() != 1) throw std::invalid_argument("univariate input expected");
  if (f.is_constant()) throw std::invalid_argument("constant input");
  const std::uint64_t p = f.field().modulus();
  Dense g(f.degree_in(0) + 1, 0);
  for (const auto& t : f.terms()) g[t.mono[0]] = t.coeff;
  std::uint64_t space = 1;
  for (std::size_t i = 1; i < g.size(); ++i) {
    space *= p;
    if (space > cfg.max_univariate_search) throw BoundExceeded();
  }
  // Make g monic.
  const std::uint64_t lead_inv = inverse(g.back(), p);
  for (auto& c : g) c = c * lead_inv % p;

  std::vector<std::pair<Dense, unsigned>> found;
  for (std::size_t d = 1; 2 * d <= g.size() - 1; ++d) {
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < d; ++i) candidates *= p;
    for (std::uint64_t n = 0; n < candidates && 2 * d <= g.size() - 1; ++n) {
      Dense c(d + 1, 0);
      c[d] = 1;
      std::uint64_t rest = n;
      for (std::size_t i = 0; i < d; ++i) {
        c[i] = rest % p;
        rest /= p;
      }
      unsigned mult = 0;
      while (divide_exact(g, c, p)) ++mult;
      if (mult > 0) found.emplace_back(c, mult);
    }
  }
  // No factor of degree ≤ half its own remains, so the rest is irreducible.
  if (g.size() > 1) found.emplace_back(g, 1);

  std::vector<std::pair<Polynomial, unsigned>> out;
  for (const auto& [dense, mult] : found) out.emplace_back(to_poly(dense, f.ring()), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    return mpoly::to_string(a.first) < mpoly::to_string(b.first);
  });
  return out;
}

groebner::Ideal maximal_ideal(const mpoly::RingPtr& ring, const std::vector<gf::Elem>& point) {
  if (point.size() != ring->nvars()) throw std::invalid_argument("point arity mismatch");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < point.size(); ++i)
    gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, ring->field.reduce(point[i])));
  return groebner::Ideal(ring, std::move(gens));
}

groebner::Ideal point_ideal(const mpoly::RingPtr& ring, const std::vector<std::vector<gf::Elem>>& points) {
  if (points.empty()) throw std::invalid_argument("no points");
  std::set<std::vector<gf::Elem>> seen;
  for (const auto& pt : points) {
    if (pt.size() != ring->nvars()) throw std::invalid_argument("point arity mismatch");
    if (!seen.insert(pt).second) throw std::invalid_argument("duplicate point");
  }
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> gens;
  std::vector<std::size_t> choice(points.size(), 0);
  while (true) {
    Polynomial prod = Polynomial::constant(ring, 1);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const std::size_t var = choice[k];
      prod = prod * (Polynomial::variable(ring, var) - Polynomial::constant(ring, ring->field.reduce(points[k][var])));
    }
    gens.push_back(std::move(prod));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return groebner::Ideal(ring, std::move(gens));
}

}  // namespace fpd::oracle
