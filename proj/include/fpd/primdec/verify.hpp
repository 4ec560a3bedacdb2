#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpd/primdec/primdec.hpp"

namespace fpd::primdec {

/// Exact structural checks on a decomposition. Failures are recorded, not
/// thrown.
struct VerificationReport {
  /// ⋂ components == input. On failure `intersection_witness` is a basis
  /// element of one side that the other side does not contain.
  bool intersection = false;
  std::optional<Polynomial> intersection_witness;

  /// comaximal[i][j]: components i and j sum to the unit ideal (diagonal
  /// entries are true by convention).
  std::vector<std::vector<bool>> comaximal;

  /// dim R/I == Σ dim R/I_i.
  bool dimension_identity = false;
  std::size_t input_dimension = 0;
  std::vector<std::size_t> component_dimensions;

  /// Each component's own invariant subspace is one-dimensional.
  std::vector<std::size_t> component_invariant_dimensions;

  /// Input generators reduce to zero modulo every component.
  bool containment = false;

  /// h_i² = h_i, h_i h_j = 0 (i ≠ j) and Σ h_i = 1 modulo the input.
  bool idempotent_laws = false;

  /// t == dim Ker(Ψ_I) == number of idempotents.
  bool component_count = false;

  bool all_comaximal() const;
  bool all_primary_invariants() const;
  bool passed() const;
  /// Named boolean results, in a fixed order.
  std::vector<std::pair<std::string, bool>> checks() const;
};

VerificationReport verify(const Decomposition& d);

/// The idempotent laws on their own, for callers without a full
/// decomposition.
bool idempotent_laws_hold(const std::vector<quotient::QuotientElement>& hs, const quotient::QuotientBasis& qb);

}  // namespace fpd::primdec
