#include "fpd/gf/field.hpp"

namespace fpd::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p >= kModulusLimit)
    throw InvalidModulus("modulus must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p))
    throw InvalidModulus("modulus must be prime, got " + std::to_string(p));
  p_ = static_cast<Elem>(p);
}

Elem PrimeField::from_signed(std::int64_t v) const {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r < 0 ? r + p_ : r);
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1 % p_;
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_signed(s0);
}

}  // namespace fpd::gf
