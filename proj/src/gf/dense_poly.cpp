#include "fpd/gf/dense_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpd::gf {

void trim(DensePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const DensePoly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

DensePoly poly_sub(const PrimeField& f, DensePoly a, const DensePoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

DensePoly poly_mul(const PrimeField& f, const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

namespace {

// Returns quotient, leaves remainder in a.
DensePoly divide_in_place(const PrimeField& f, DensePoly& a, const DensePoly& b) {
  const int db = degree(b);
  if (db < 0) throw DivisionByZero();
  trim(a);
  const Elem lead_inv = f.inv(b[db]);
  DensePoly q;
  int da = degree(a);
  if (da >= db) q.assign(static_cast<std::size_t>(da - db + 1), 0);
  while (da >= db) {
    const Elem c = f.mul(a[da], lead_inv);
    const std::size_t shift = static_cast<std::size_t>(da - db);
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    da = degree(a);
  }
  trim(a);
  trim(q);
  return q;
}

DensePoly make_monic(const PrimeField& f, DensePoly a) {
  trim(a);
  if (a.empty()) return a;
  const Elem inv = f.inv(a.back());
  for (Elem& c : a) c = f.mul(c, inv);
  return a;
}

void split_roots(const PrimeField& f, const DensePoly& g, std::vector<Elem>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(f.div(g[0], g[1])));
    return;
  }
  const std::uint64_t half = (std::uint64_t{f.modulus()} - 1) / 2;
  for (Elem shift = 0; shift < f.modulus(); ++shift) {
    DensePoly h = poly_pow_mod(f, DensePoly{shift, 1}, half, g);
    h = poly_sub(f, std::move(h), DensePoly{1});
    h = poly_gcd(f, g, h);
    const int dh = degree(h);
    if (dh > 0 && dh < d) {
      split_roots(f, h, out);
      split_roots(f, poly_div(f, g, h), out);
      return;
    }
  }
  throw std::logic_error("root splitting made no progress");
}

}  // namespace

DensePoly poly_rem(const PrimeField& f, DensePoly a, const DensePoly& b) {
  divide_in_place(f, a, b);
  return a;
}

DensePoly poly_div(const PrimeField& f, DensePoly a, const DensePoly& b) {
  return divide_in_place(f, a, b);
}

DensePoly poly_gcd(const PrimeField& f, DensePoly a, DensePoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DensePoly r = poly_rem(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, std::move(a));
}

DensePoly poly_pow_mod(const PrimeField& f, DensePoly base, std::uint64_t e, const DensePoly& m) {
  DensePoly result = poly_rem(f, DensePoly{1}, m);
  base = poly_rem(f, std::move(base), m);
  while (e != 0) {
    if (e & 1) result = poly_rem(f, poly_mul(f, result, base), m);
    base = poly_rem(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

Elem poly_eval(const PrimeField& f, const DensePoly& a, Elem x) {
  Elem acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

DensePoly minimal_polynomial(const PrimeField& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Matrix> powers{Matrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(multiply(f, powers.back(), m));
    // Columns are the flattened powers M^0..M^k.
    Matrix stack(n * n, k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) stack(r * n + c, j) = powers[j](r, c);
    const auto kernel = kernel_basis(f, stack);
    if (!kernel.empty()) {
      // First dependency: the kernel is spanned by one vector with a one at k.
      DensePoly mp(kernel.front().begin(), kernel.front().end());
      return make_monic(f, std::move(mp));
    }
  }
  throw std::logic_error("no linear dependency among matrix powers");
}

std::vector<Elem> roots_in_field(const PrimeField& f, const DensePoly& a) {
  DensePoly g = a;
  trim(g);
  if (g.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Elem> out;
  if (f.modulus() == 2) {
    for (Elem x : {Elem{0}, Elem{1}})
      if (poly_eval(f, g, x) == 0) out.push_back(x);
    return out;
  }
  const DensePoly xp = poly_pow_mod(f, DensePoly{0, 1}, f.modulus(), g);
  const DensePoly split = poly_gcd(f, g, poly_sub(f, xp, DensePoly{0, 1}));
  split_roots(f, split, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fpd::gf
