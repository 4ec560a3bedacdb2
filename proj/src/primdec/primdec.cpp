#include "fpd/primdec/primdec.hpp"

#include <algorithm>
#include <future>

namespace fpd::primdec {

std::vector<std::string> canonical_key(const Ideal& component) {
  return component.groebner_basis().to_strings();
}

Decomposition primary_decomposition(const Ideal& ideal, const Options& opts) {
  // D1: reduced basis and standard monomials.
  const Ideal input = ideal.with_groebner_basis();
  const GroebnerBasis gb = input.groebner_basis();
  if (gb.is_unit()) throw UnitIdeal();
  auto qb = std::make_shared<const quotient::QuotientBasis>(quotient::macaulay_basis(gb));

  // D2: the Frobenius-invariant subalgebra; its dimension is t.
  idem::Subalgebra invariant = idem::invariant_subspace(qb);

  // D3: primitive idempotents.
  std::vector<quotient::QuotientElement> idempotents = idem::split_algebra(invariant, opts.split);
  std::vector<Polynomial> reps;
  reps.reserve(idempotents.size());
  for (const auto& h : idempotents) reps.push_back(quotient::from_coords(h, *qb));

  // D4: one saturation per idempotent.
  std::vector<Ideal> components;
  components.reserve(reps.size());
  if (opts.parallel && reps.size() > 1) {
    std::vector<std::future<Ideal>> jobs;
    for (const auto& h : reps)
      jobs.push_back(std::async(std::launch::async, [&input, &h] { return groebner::saturate(input, h); }));
    for (auto& j : jobs) components.push_back(j.get());
  } else {
    for (const auto& h : reps) components.push_back(groebner::saturate(input, h));
  }
  // Keep each idempotent next to the component it produced.
  struct Entry {
    std::vector<std::string> key;
    Ideal component;
    quotient::QuotientElement idempotent;
    Polynomial rep;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < components.size(); ++i)
    entries.push_back({canonical_key(components[i]), std::move(components[i]), std::move(idempotents[i]),
                       std::move(reps[i])});
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  components.clear();
  idempotents.clear();
  reps.clear();
  for (auto& e : entries) {
    components.push_back(std::move(e.component));
    idempotents.push_back(std::move(e.idempotent));
    reps.push_back(std::move(e.rep));
  }

  return Decomposition{input, std::move(qb), std::move(invariant), std::move(idempotents), std::move(reps),
                       std::move(components)};
}

}  // namespace fpd::primdec
