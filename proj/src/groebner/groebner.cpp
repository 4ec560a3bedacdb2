#include "fpd/groebner/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <stdexcept>

namespace fpd::groebner {

using mpoly::Monomial;
using mpoly::Term;

std::vector<std::string> GroebnerBasis::to_strings() const {
  if (polys_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(polys_.size());
  for (const auto& p : polys_) out.push_back(mpoly::to_string(p));
  return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  const gf::PrimeField& field = f.field();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* reducer = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(lt.mono)) {
        reducer = &d;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lt);
      p = p.tail();
      continue;
    }
    const gf::Elem c = field.div(lt.coeff, reducer->leading_coeff());
    p = p.sub_mul_term(c, lt.mono / reducer->leading_monomial(), *reducer);
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!mpoly::same_ring(f.ring(), gb.ring()))
    throw std::invalid_argument("normal form across different rings");
  return reduce(f, gb.polys());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const gf::PrimeField& field = f.field();
  const Polynomial a = f.mul_term(field.inv(f.leading_coeff()), l / f.leading_monomial());
  return a.sub_mul_term(field.inv(g.leading_coeff()), l / g.leading_monomial(), g);
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Drops members whose leading monomial is divisible by another's, then
// reduces each against the rest.
std::vector<Polynomial> inter_reduce(std::vector<Polynomial> g, const mpoly::MonomialOrder& order) {
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& f : g) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return m.leading_monomial().divides(f.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(f));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    reduced.push_back(reduce(minimal[k], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

GroebnerBasis unit_basis(const RingPtr& ring) {
  return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring) {
  const mpoly::MonomialOrder& order = ring->order;
  std::vector<Polynomial> basis;
  for (const auto& f : gens) {
    if (!mpoly::same_ring(f.ring(), ring)) throw std::invalid_argument("generator from a different ring");
    if (f.is_zero()) continue;
    if (f.is_constant()) return unit_basis(ring);
    const Polynomial m = f.monic();
    if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(m);
  }
  if (basis.empty()) return GroebnerBasis(ring, {});

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  const auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push_back({i, j, basis[i].leading_monomial().lcm(basis[j].leading_monomial())});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  const auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    // Normal strategy: smallest lcm first, ties broken by index.
    auto best = queue.begin();
    for (auto it = queue.begin() + 1; it != queue.end(); ++it) {
      const auto cmp = order.compare(it->lcm, best->lcm);
      if (cmp < 0 || (cmp == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    const Pair pair = *best;
    queue.erase(best);
    pending.erase({pair.i, pair.j});

    const Polynomial& fi = basis[pair.i];
    const Polynomial& fj = basis[pair.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, k) &&
              !is_pending(pair.j, k);
    }
    if (chain) continue;

    Polynomial r = reduce(s_polynomial(fi, fj), basis);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit_basis(ring);
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis(ring, inter_reduce(std::move(basis), order));
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring,
                         mpoly::OrderKind kind) {
  const RingPtr target = mpoly::with_order(ring, kind);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& f : gens) moved.push_back(f.in_ring(target));
  return buchberger(moved, target);
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& polys = gb.polys();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : polys[i].terms())
        if (polys[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

}  // namespace fpd::groebner
