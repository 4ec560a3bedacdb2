#include "fpd/groebner/ideal.hpp"

#include <stdexcept>

namespace fpd::groebner {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (!mpoly::same_ring(g.ring(), ring_)) throw std::invalid_argument("generator from a different ring");
  if (generators_.empty()) generators_.push_back(Polynomial(ring_));
}

Ideal::Ideal(GroebnerBasis gb) : ring_(gb.ring()), generators_(gb.polys()), gb_(std::move(gb)) {
  if (generators_.empty()) generators_.push_back(Polynomial(ring_));
}

GroebnerBasis Ideal::groebner_basis() const {
  if (gb_) return *gb_;
  return buchberger(generators_, ring_);
}

Ideal Ideal::with_groebner_basis() const {
  if (gb_) return *this;
  return Ideal(groebner_basis());
}

bool contains(const Ideal& ideal, const Polynomial& f) {
  return normal_form(f, ideal.groebner_basis()).is_zero();
}

bool is_subset(const Ideal& a, const Ideal& b) {
  const GroebnerBasis gb = b.groebner_basis();
  for (const auto& g : a.generators())
    if (!normal_form(g, gb).is_zero()) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!mpoly::same_ring(a.ring(), b.ring())) throw std::invalid_argument("ideals in different rings");
  return a.groebner_basis() == b.groebner_basis();
}

bool ideal_equal(const Ideal& a, const Ideal& b, mpoly::OrderKind kind) {
  if (!mpoly::same_ring(a.ring(), b.ring())) throw std::invalid_argument("ideals in different rings");
  return buchberger(a.generators(), a.ring(), kind) == buchberger(b.generators(), b.ring(), kind);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!mpoly::same_ring(a.ring(), b.ring())) throw std::invalid_argument("ideals in different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// Keeps the members free of the leading variable and recomputes the reduced
// basis under the base ring's order.
Ideal restrict_to_base(const GroebnerBasis& extended, const RingPtr& base) {
  std::vector<Polynomial> kept;
  for (const auto& g : extended.polys())
    if (g.degree_in(0) == 0) kept.push_back(g.drop_leading_variable(base));
  return Ideal(buchberger(kept, base));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!mpoly::same_ring(a.ring(), b.ring())) throw std::invalid_argument("ideals in different rings");
  const RingPtr ext = mpoly::with_leading_variable(a.ring(), "t");
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.lift_to(ext));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * f.lift_to(ext));
  return restrict_to_base(buchberger(gens, ext), a.ring());
}

GroebnerBasis elimination_basis(const Ideal& ideal, const Polynomial& g, std::string_view aux_name) {
  if (g.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  if (!mpoly::same_ring(ideal.ring(), g.ring())) throw std::invalid_argument("ideal and g in different rings");
  const RingPtr ext = mpoly::with_leading_variable(ideal.ring(), aux_name);
  const Polynomial u = Polynomial::variable(ext, 0);
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.lift_to(ext));
  gens.push_back(Polynomial::constant(ext, 1) - u * g.lift_to(ext));
  return buchberger(gens, ext);
}

Ideal saturate(const Ideal& ideal, const Polynomial& g) {
  return restrict_to_base(elimination_basis(ideal, g), ideal.ring());
}

}  // namespace fpd::groebner
