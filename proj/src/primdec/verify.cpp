#include "fpd/primdec/verify.hpp"

#include <algorithm>

namespace fpd::primdec {

bool VerificationReport::all_comaximal() const {
  return std::all_of(comaximal.begin(), comaximal.end(),
                     [](const auto& row) { return std::all_of(row.begin(), row.end(), [](bool b) { return b; }); });
}

bool VerificationReport::all_primary_invariants() const {
  return std::all_of(component_invariant_dimensions.begin(), component_invariant_dimensions.end(),
                     [](std::size_t d) { return d == 1; });
}

std::vector<std::pair<std::string, bool>> VerificationReport::checks() const {
  return {{"intersection", intersection},
          {"comaximal", all_comaximal()},
          {"dimension_identity", dimension_identity},
          {"component_invariant_dim_1", all_primary_invariants()},
          {"containment", containment},
          {"idempotent_laws", idempotent_laws},
          {"component_count", component_count}};
}

bool VerificationReport::passed() const {
  const auto all = checks();
  return std::all_of(all.begin(), all.end(), [](const auto& c) { return c.second; });
}

bool idempotent_laws_hold(const std::vector<quotient::QuotientElement>& hs, const quotient::QuotientBasis& qb) {
  const gf::PrimeField& f = qb.field();
  quotient::QuotientElement sum(qb.dimension(), 0);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (quotient::multiply(hs[i], hs[i], qb) != hs[i]) return false;
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const auto prod = quotient::multiply(hs[i], hs[j], qb);
      if (std::any_of(prod.begin(), prod.end(), [](gf::Elem e) { return e != 0; })) return false;
    }
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = f.add(sum[k], hs[i][k]);
  }
  return sum == quotient::one(qb);
}

namespace {

std::optional<Polynomial> first_outside(const GroebnerBasis& candidates, const GroebnerBasis& reducer) {
  for (const auto& g : candidates.polys())
    if (!groebner::normal_form(g, reducer).is_zero()) return g;
  return std::nullopt;
}

}  // namespace

VerificationReport verify(const Decomposition& d) {
  VerificationReport r;
  const GroebnerBasis input_gb = d.input.groebner_basis();
  const std::size_t t = d.components.size();

  if (t == 0) {
    r.intersection = input_gb.is_unit();
  } else {
    Ideal meet = d.components.front();
    for (std::size_t i = 1; i < t; ++i) meet = groebner::intersect(meet, d.components[i]);
    const GroebnerBasis meet_gb = meet.groebner_basis();
    r.intersection = meet_gb == input_gb;
    if (!r.intersection) {
      r.intersection_witness = first_outside(meet_gb, input_gb);
      if (!r.intersection_witness) r.intersection_witness = first_outside(input_gb, meet_gb);
    }
  }

  r.comaximal.assign(t, std::vector<bool>(t, true));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      const bool ok = groebner::ideal_sum(d.components[i], d.components[j]).groebner_basis().is_unit();
      r.comaximal[i][j] = r.comaximal[j][i] = ok;
    }

  r.input_dimension = d.quotient->dimension();
  std::size_t total = 0;
  bool dims_ok = true;
  for (const auto& c : d.components) {
    const GroebnerBasis cgb = c.groebner_basis();
    if (!quotient::is_zero_dimensional(cgb) || cgb.is_unit()) {
      dims_ok = false;
      r.component_dimensions.push_back(0);
      r.component_invariant_dimensions.push_back(0);
      continue;
    }
    auto cqb = std::make_shared<const quotient::QuotientBasis>(quotient::macaulay_basis(cgb));
    r.component_dimensions.push_back(cqb->dimension());
    total += cqb->dimension();
    r.component_invariant_dimensions.push_back(idem::invariant_subspace(cqb).dimension());
  }
  r.dimension_identity = dims_ok && total == r.input_dimension;

  r.containment = std::all_of(d.components.begin(), d.components.end(),
                              [&](const Ideal& c) { return groebner::is_subset(d.input, c); });

  r.idempotent_laws = idempotent_laws_hold(d.idempotents, *d.quotient);
  r.component_count = d.invariant.dimension() == t && d.idempotents.size() == t;
  return r;
}

}  // namespace fpd::primdec
