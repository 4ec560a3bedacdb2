#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fpd/groebner/groebner.hpp"

namespace fpd::groebner {

/// An ideal given by generators, optionally carrying its reduced basis.
/// The zero ideal is represented by the single generator 0.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  explicit Ideal(GroebnerBasis gb);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool has_groebner_basis() const { return gb_.has_value(); }
  /// The cached basis, or a freshly computed one. Never mutates.
  GroebnerBasis groebner_basis() const;
  /// Copy of this ideal that carries its reduced basis.
  Ideal with_groebner_basis() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::optional<GroebnerBasis> gb_;
};

bool contains(const Ideal& ideal, const Polynomial& f);
/// a ⊆ b.
bool is_subset(const Ideal& a, const Ideal& b);

/// True iff the reduced bases under the ring's own order coincide.
bool ideal_equal(const Ideal& a, const Ideal& b);
/// Same comparison under the order `kind`.
bool ideal_equal(const Ideal& a, const Ideal& b, mpoly::OrderKind kind);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// a ∩ b by eliminating t from ⟨t·a, (1 − t)·b⟩ under lex with t greatest.
Ideal intersect(const Ideal& a, const Ideal& b);

/// The reduced lex basis of ideal ∪ {1 − u·g} in F_p[u, x_1..x_n], u
/// greatest. Its u-free members generate ideal : g^∞.
GroebnerBasis elimination_basis(const Ideal& ideal, const Polynomial& g,
                                std::string_view aux_name = "u");

/// ideal : ⟨g⟩^∞, returned with its reduced basis in the ideal's ring.
/// Requires g ≠ 0.
Ideal saturate(const Ideal& ideal, const Polynomial& g);

}  // namespace fpd::groebner
