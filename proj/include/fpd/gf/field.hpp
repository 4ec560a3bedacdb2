#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpd::gf {

/// A residue in [0, p). Stored unboxed so rows of a matrix stay contiguous
/// and can be handed to the vector kernels directly.
using Elem = std::uint32_t;

/// Exclusive upper bound on the modulus: products are formed in 64 bits.
inline constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 31;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in F_p") {}
};

class InvalidModulus : public std::invalid_argument {
 public:
  explicit InvalidModulus(const std::string& what) : std::invalid_argument(what) {}
};

/// Trial division primality test; fine for moduli below 2^31.
bool is_prime(std::uint64_t n);

/// The prime field F_p. Elements are plain residues; every operation takes
/// canonical representatives and returns one.
class PrimeField {
 public:
  /// Throws InvalidModulus unless p is a prime below kModulusLimit.
  explicit PrimeField(std::uint64_t p);

  Elem modulus() const { return p_; }

  Elem reduce(std::uint64_t v) const { return static_cast<Elem>(v % p_); }
  Elem from_signed(std::int64_t v) const;

  Elem add(Elem a, Elem b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Elem p_;
};

}  // namespace fpd::gf
