#include "fpd/mpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace fpd::mpoly {
namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

MonomialOrder default_order(OrderKind kind, std::size_t n) {
  return kind == OrderKind::kLex ? MonomialOrder::lex(n) : MonomialOrder::grevlex(n);
}

}  // namespace

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars, OrderKind kind) {
  if (vars.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
  const std::size_t n = vars.size();
  return std::make_shared<const Ring>(Ring{gf::PrimeField(p), std::move(vars), default_order(kind, n)});
}

RingPtr with_order(const RingPtr& ring, OrderKind kind) {
  if (ring->order.kind() == kind) return ring;
  return std::make_shared<const Ring>(
      Ring{ring->field, ring->vars, MonomialOrder(kind, ring->order.precedence())});
}

RingPtr with_leading_variable(const RingPtr& ring, std::string_view preferred_name) {
  std::string name(preferred_name);
  const auto taken = [&](const std::string& s) {
    return std::find(ring->vars.begin(), ring->vars.end(), s) != ring->vars.end();
  };
  for (int k = 1; taken(name); ++k) name = std::string(preferred_name) + "_" + std::to_string(k);
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  const std::size_t n = vars.size();
  return std::make_shared<const Ring>(Ring{ring->field, std::move(vars), MonomialOrder::lex(n)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring->order;
  const gf::PrimeField& field = ring->field;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw std::invalid_argument("monomial arity mismatch");
    const gf::Elem c = field.reduce(t.coeff);
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = field.add(merged.back().coeff, c);
    } else {
      merged.push_back({c, std::move(t.mono)});
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return Polynomial(std::move(ring), std::move(merged));
}

Polynomial Polynomial::constant(RingPtr ring, gf::Elem c) {
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), c, Monomial(n));
}

Polynomial Polynomial::monomial(RingPtr ring, gf::Elem c, Monomial m) {
  c = ring->field.reduce(c);
  if (c == 0) return Polynomial(std::move(ring));
  std::vector<Term> t{{c, std::move(m)}};
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), 1, Monomial::variable(n, index));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  return sub_mul_term(field().neg(1), Monomial(ring_->nvars()), g);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return sub_mul_term(1, Monomial(ring_->nvars()), g);
}

Polynomial Polynomial::operator-() const { return scaled(field().neg(1)); }

Polynomial Polynomial::sub_mul_term(gf::Elem c, const Monomial& m, const Polynomial& g) const {
  if (!same_ring(ring_, g.ring_)) throw std::invalid_argument("polynomials from different rings");
  const gf::PrimeField& f = field();
  const MonomialOrder& order = ring_->order;
  const gf::Elem neg_c = f.neg(c);
  if (neg_c == 0 || g.is_zero()) return *this;

  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  // Multiplying by m preserves the order of g's terms.
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (; b != g.terms_.end(); ++b) shifted.push_back({f.mul(neg_c, b->coeff), b->mono * m});
  auto s = shifted.begin();
  while (a != terms_.end() && s != shifted.end()) {
    const auto cmp = order.compare(a->mono, s->mono);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(std::move(*s++));
    } else {
      const gf::Elem sum = f.add(a->coeff, s->coeff);
      if (sum != 0) out.push_back({sum, a->mono});
      ++a;
      ++s;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), std::make_move_iterator(s), std::make_move_iterator(shifted.end()));
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  if (!same_ring(ring_, g.ring_)) throw std::invalid_argument("polynomials from different rings");
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const gf::PrimeField& f = field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({f.mul(a.coeff, b.coeff), a.mono * b.mono});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(gf::Elem c) const {
  c = field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(gf::Elem c, const Monomial& m) const {
  c = field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({field().mul(t.coeff, c), t.mono * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target->nvars() != ring_->nvars() || !(target->field == ring_->field))
    throw std::invalid_argument("incompatible target ring");
  return from_terms(std::move(target), terms_);
}

Polynomial Polynomial::lift_to(RingPtr extended) const {
  if (extended->nvars() != ring_->nvars() + 1) throw std::invalid_argument("not an extension ring");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> e{0};
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return from_terms(std::move(extended), std::move(out));
}

Polynomial Polynomial::drop_leading_variable(RingPtr base) const {
  if (base->nvars() + 1 != ring_->nvars()) throw std::invalid_argument("not the base ring");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono[0] != 0) throw std::invalid_argument("polynomial involves the eliminated variable");
    std::vector<Exponent> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return from_terms(std::move(base), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& vars = f.ring()->vars;
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += '+';
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[i];
      if (t.mono[i] > 1) mono += '^' + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + '*' + mono;
    }
  }
  return out;
}

}  // namespace fpd::mpoly
