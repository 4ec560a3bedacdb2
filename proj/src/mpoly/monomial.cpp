#include "fpd/mpoly/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fpd::mpoly {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const unsigned s = unsigned{exps_[i]} + other.exps_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
    out.exps_[i] = static_cast<Exponent>(s);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::invalid_argument("monomial does not divide");
    out.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

int Monomial::pure_power_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> check = precedence_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw std::invalid_argument("variable precedence is not a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> prec(nvars);
  std::iota(prec.begin(), prec.end(), 0);
  return {OrderKind::kLex, std::move(prec)};
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> prec(nvars);
  std::iota(prec.begin(), prec.end(), 0);
  return {OrderKind::kGrevlex, std::move(prec)};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::kLex) {
    for (std::size_t v : precedence_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }
  const unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da <=> db;
  // Equal degree: the monomial with the larger exponent in the least
  // significant differing variable is smaller.
  for (std::size_t k = precedence_.size(); k-- > 0;) {
    const std::size_t v = precedence_[k];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace fpd::mpoly
