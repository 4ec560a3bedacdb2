#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpd/groebner/ideal.hpp"
#include "fpd/idem/idem.hpp"
#include "fpd/quotient/quotient.hpp"

namespace fpd::primdec {

using groebner::GroebnerBasis;
using groebner::Ideal;
using mpoly::Polynomial;

class UnitIdeal : public std::domain_error {
 public:
  UnitIdeal() : std::domain_error("ideal is the whole ring") {}
};

using quotient::NotZeroDimensional;

struct Options {
  /// Run the per-idempotent saturations on separate threads. Output is
  /// identical either way.
  bool parallel = false;
  idem::SplitOptions split;
};

/// I = I_1 ∩ ... ∩ I_t with the artifacts that produced it.
struct Decomposition {
  Ideal input;
  std::shared_ptr<const quotient::QuotientBasis> quotient;
  idem::Subalgebra invariant;
  /// Primitive idempotents and their normal-form representatives;
  /// idempotents[i] is the one whose saturation gave components[i].
  std::vector<quotient::QuotientElement> idempotents;
  std::vector<Polynomial> idempotent_polys;
  /// Components with reduced bases, sorted by printed basis.
  std::vector<Ideal> components;

  std::size_t t() const { return components.size(); }
};

/// Throws NotZeroDimensional or UnitIdeal.
Decomposition primary_decomposition(const Ideal& ideal, const Options& opts = {});

/// Sort key used for components: the printed reduced basis.
std::vector<std::string> canonical_key(const Ideal& component);

}  // namespace fpd::primdec
