#include <doctest.h>

#include <algorithm>
#include <random>

#include "fpd/groebner/ideal.hpp"
#include "fpd/idem/idem.hpp"
#include "fpd/mpoly/parse.hpp"

using namespace fpd;
using groebner::Ideal;
using mpoly::Polynomial;
using quotient::QuotientBasis;

namespace {

std::shared_ptr<const QuotientBasis> quotient_of(const mpoly::RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(mpoly::parse_poly(t, r));
  return std::make_shared<const QuotientBasis>(quotient::macaulay_basis(Ideal(r, gens).groebner_basis()));
}

std::shared_ptr<const QuotientBasis> example1() {
  return quotient_of(mpoly::make_ring(5, {"x", "y", "z"}), {"y^2 - x*z", "z^2 - x^2*y", "x + y + z - 1"});
}

std::shared_ptr<const QuotientBasis> example3() { return quotient_of(mpoly::make_ring(3, {"x"}), {"x^6+x^5+x^4+2"}); }

std::vector<gf::Vector> coords_of(const QuotientBasis& qb, std::initializer_list<const char*> texts) {
  std::vector<gf::Vector> out;
  for (const char* t : texts) out.push_back(quotient::to_coords(mpoly::parse_poly(t, qb.ring()), qb));
  return out;
}

std::vector<std::string> printed(const std::vector<quotient::QuotientElement>& hs, const QuotientBasis& qb) {
  std::vector<std::string> out;
  for (const auto& h : hs) out.push_back(mpoly::to_string(quotient::from_coords(h, qb)));
  return out;
}

gf::Vector add(const gf::PrimeField& f, gf::Vector a, const gf::Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

gf::Vector scale(const gf::PrimeField& f, gf::Vector a, gf::Elem c) {
  for (auto& e : a) e = f.mul(e, c);
  return a;
}

}  // namespace

TEST_CASE("invariant subspace of Example 1") {
  const auto qb = example1();
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  CHECK(v.dimension() == 4);
  const idem::Subalgebra expected(qb, coords_of(*qb, {"1", "z - z^2", "z^2 + z^3", "z^3 - 2*z^4"}));
  CHECK(v.basis() == expected.basis());
  CHECK(v.is_closed());
}

TEST_CASE("invariant subspace of Example 3") {
  const auto qb = example3();
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  CHECK(v.dimension() == 3);
  const idem::Subalgebra expected(qb, coords_of(*qb, {"1", "-x^3 + x^2", "x^5 + x"}));
  CHECK(v.basis() == expected.basis());
}

TEST_CASE("invariant subspace of a maximal ideal is the constants") {
  const auto qb = quotient_of(mpoly::make_ring(5, {"x"}), {"x - 2"});
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  CHECK(v.dimension() == 1);
  CHECK(v.element(0) == gf::Vector{1});
  CHECK(idem::split_algebra(v) == std::vector<gf::Vector>{{1}});
}

TEST_CASE("subalgebra coordinates and membership") {
  const auto qb = example1();
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  const gf::Vector x = quotient::to_coords(mpoly::parse_poly("x", qb->ring()), *qb);
  CHECK_FALSE(v.contains(x));
  const gf::Vector coeffs{1, 2, 3, 4};
  const gf::Vector w = v.combine(coeffs);
  REQUIRE(v.coordinates(w).has_value());
  CHECK(*v.coordinates(w) == coeffs);
}

TEST_CASE("Example 1 idempotents") {
  const auto qb = example1();
  const auto& f = qb->field();
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  const auto hs = idem::split_algebra(v);
  CHECK(printed(hs, *qb) == std::vector<std::string>{"2*z^3+2*z", "3*z^4+2*z^3+4*z^2+2*z+1", "3*z^4+3*z^3+2*z",
                                                     "4*z^4+3*z^3+z^2+4*z"});
  // h1..h4 from the worked split of the kernel; after normalization the
  // pieces <3h2>, <h1+h2>, <h3>, <2h3+h4> give exactly these idempotents.
  const auto h = coords_of(*qb, {"-4 - z + 2*z^2 + z^3", "3*z - 3*z^2 + z^3 - 2*z^4", "z^3 + z", "z^3 - 2*z^4"});
  std::vector<gf::Vector> expected{add(f, h[0], h[1]), scale(f, h[1], 3), scale(f, h[2], 2),
                                   add(f, scale(f, h[2], 2), h[3])};
  std::sort(expected.begin(), expected.end(), [&](const gf::Vector& a, const gf::Vector& b) {
    return mpoly::to_string(quotient::from_coords(a, *qb)) < mpoly::to_string(quotient::from_coords(b, *qb));
  });
  CHECK(hs == expected);
  gf::Vector total(qb->dimension(), 0);
  for (const auto& e : hs) {
    CHECK(quotient::multiply(e, e, *qb) == e);
    CHECK(v.contains(e));
    total = add(f, total, e);
  }
  CHECK(total == quotient::one(*qb));
  // z^3 + z itself squares to 3(z^3 + z), so it is not idempotent.
  CHECK(quotient::multiply(h[2], h[2], *qb) == scale(f, h[2], 3));
}

TEST_CASE("Example 3 idempotents") {
  const auto qb = example3();
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  const auto hs = idem::split_algebra(v);
  CHECK(printed(hs, *qb) ==
        std::vector<std::string>{"2*x^5+x^3+2*x^2+2*x", "x^3+2*x^2+2", "x^5+x^3+2*x^2+x+2"});
}

TEST_CASE("single splitting step") {
  const auto qb = example3();
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  const auto parts = idem::split_once(v);
  std::size_t total = 0;
  for (const auto& w : parts) {
    CHECK(w.is_closed());
    total += w.dimension();
  }
  CHECK(parts.size() >= 2);
  CHECK(total == v.dimension());

  const auto one = quotient_of(mpoly::make_ring(3, {"x"}), {"x^2"});
  const idem::Subalgebra trivial = idem::invariant_subspace(one);
  CHECK(trivial.dimension() == 1);
  const auto same = idem::split_once(trivial);
  REQUIRE(same.size() == 1);
  CHECK(same[0].basis() == trivial.basis());
}

TEST_CASE("invariant subspaces are reduced subrings") {
  std::mt19937_64 rng(12);
  for (const auto& qb : {example1(), example3()}) {
    const auto& f = qb->field();
    const idem::Subalgebra v = idem::invariant_subspace(qb);
    std::vector<idem::Subalgebra> pending{v};
    while (!pending.empty()) {
      const idem::Subalgebra w = pending.back();
      pending.pop_back();
      CHECK(w.is_closed());
      for (int trial = 0; trial < 40; ++trial) {
        gf::Vector ca(w.dimension()), cb(w.dimension());
        for (auto& c : ca) c = static_cast<gf::Elem>(rng() % f.modulus());
        for (auto& c : cb) c = static_cast<gf::Elem>(rng() % f.modulus());
        const gf::Vector a = w.combine(ca), b = w.combine(cb);
        CHECK(w.contains(quotient::multiply(a, b, *qb)));
        bool a_zero = std::all_of(a.begin(), a.end(), [](gf::Elem e) { return e == 0; });
        gf::Vector pw = a;
        for (std::size_t m = 1; m <= qb->dimension() && !a_zero; ++m) {
          CHECK_FALSE(std::all_of(pw.begin(), pw.end(), [](gf::Elem e) { return e == 0; }));
          pw = quotient::multiply(pw, a, *qb);
        }
      }
      if (w.dimension() > 1)
        for (auto& part : idem::split_once(w)) pending.push_back(part);
    }
  }
}

TEST_CASE("eigenvalues by scan and by minimal polynomial agree") {
  const gf::PrimeField f5(5);
  const gf::Matrix m = gf::Matrix::from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, 4}}, 3);
  idem::SplitOptions scan, roots;
  roots.eigen_scan_limit = 0;
  CHECK(idem::eigenvalues(f5, m, scan) == std::vector<gf::Elem>{2, 4});
  CHECK(idem::eigenvalues(f5, m, roots) == std::vector<gf::Elem>{2, 4});

  for (const auto& qb : {example1(), example3()}) {
    const idem::Subalgebra v = idem::invariant_subspace(qb);
    CHECK(idem::split_algebra(v, scan) == idem::split_algebra(v, roots));
  }
}

TEST_CASE("large modulus takes the root-finding path") {
  // x = 1, 2, 3 over F_1000003.
  const auto r = mpoly::make_ring(1000003, {"x"});
  const auto qb = quotient_of(r, {"x^3 - 6*x^2 + 11*x - 6"});
  const idem::Subalgebra v = idem::invariant_subspace(qb);
  CHECK(v.dimension() == 3);
  const auto hs = idem::split_algebra(v);
  CHECK(hs.size() == 3);
  const auto& f = qb->field();
  gf::Vector total(qb->dimension(), 0);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    CHECK(quotient::multiply(hs[i], hs[i], *qb) == hs[i]);
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      CHECK(quotient::multiply(hs[i], hs[j], *qb) == gf::Vector(qb->dimension(), 0));
    total = add(f, total, hs[i]);
  }
  CHECK(total == quotient::one(*qb));
}

TEST_CASE("splitting a non-reduced algebra is reported") {
  // F_3[x]/<x^2> contains the nilpotent x; splitting it as if it were
  // reduced must fail loudly rather than return a bogus idempotent.
  const auto qb = quotient_of(mpoly::make_ring(3, {"x"}), {"x^2"});
  const idem::Subalgebra whole(qb, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(idem::split_algebra(whole), idem::NilpotentElement);
}
