#include <doctest.h>

#include <random>

#include "fpd/groebner/ideal.hpp"
#include "fpd/mpoly/parse.hpp"
#include "fpd/quotient/quotient.hpp"

using namespace fpd;
using groebner::Ideal;
using mpoly::Polynomial;

namespace {

Ideal ideal_of(const mpoly::RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(mpoly::parse_poly(t, r));
  return Ideal(r, gens);
}

std::vector<std::string> printed(const quotient::QuotientBasis& qb) {
  std::vector<std::string> out;
  for (const auto& m : qb.monomials()) out.push_back(mpoly::to_string(Polynomial::monomial(qb.ring(), 1, m)));
  return out;
}

struct Example1 {
  mpoly::RingPtr ring = mpoly::make_ring(5, {"x", "y", "z"});
  Ideal ideal = ideal_of(ring, {"y^2 - x*z", "z^2 - x^2*y", "x + y + z - 1"});
  quotient::QuotientBasis qb = quotient::macaulay_basis(ideal.groebner_basis());
};

struct Example3 {
  mpoly::RingPtr ring = mpoly::make_ring(3, {"x"});
  Ideal ideal = ideal_of(ring, {"x^6+x^5+x^4+2"});
  quotient::QuotientBasis qb = quotient::macaulay_basis(ideal.groebner_basis());
};

Polynomial random_poly(std::mt19937_64& rng, const mpoly::RingPtr& r, unsigned max_exp) {
  std::vector<mpoly::Term> terms;
  for (int k = 0; k < 5; ++k) {
    std::vector<mpoly::Exponent> e(r->nvars());
    for (auto& x : e) x = static_cast<mpoly::Exponent>(rng() % (max_exp + 1));
    terms.push_back({static_cast<gf::Elem>(rng() % r->field.modulus()), mpoly::Monomial(e)});
  }
  return Polynomial::from_terms(r, terms);
}

}  // namespace

TEST_CASE("zero-dimensionality") {
  const Example1 ex;
  CHECK(quotient::is_zero_dimensional(ex.ideal.groebner_basis()));
  const auto r = mpoly::make_ring(5, {"x", "y"});
  CHECK_FALSE(quotient::is_zero_dimensional(ideal_of(r, {"x"}).groebner_basis()));
  CHECK_THROWS_AS(quotient::macaulay_basis(ideal_of(r, {"x"}).groebner_basis()), quotient::NotZeroDimensional);
  const auto unit = ideal_of(r, {"1"}).groebner_basis();
  CHECK(quotient::is_zero_dimensional(unit));
  CHECK(quotient::macaulay_basis(unit).dimension() == 0);
}

TEST_CASE("Macaulay bases") {
  // {z^4, z^3, z^2, z, y, 1}, listed descending under lex x > y > z.
  const Example1 ex1;
  CHECK(printed(ex1.qb) == std::vector<std::string>{"y", "z^4", "z^3", "z^2", "z", "1"});
  const Example3 ex3;
  CHECK(printed(ex3.qb) == std::vector<std::string>{"x^5", "x^4", "x^3", "x^2", "x", "1"});
  const auto r = mpoly::make_ring(3, {"x"});
  CHECK(printed(quotient::macaulay_basis(ideal_of(r, {"x-1"}).groebner_basis())) == std::vector<std::string>{"1"});
  const auto r2 = mpoly::make_ring(7, {"x", "y"}, mpoly::OrderKind::kGrevlex);
  CHECK(printed(quotient::macaulay_basis(ideal_of(r2, {"x^2", "y^2"}).groebner_basis())) ==
        std::vector<std::string>{"x*y", "x", "y", "1"});
}

TEST_CASE("coordinates") {
  const Example1 ex;
  CHECK(quotient::to_coords(mpoly::parse_poly("y^2 - x*z", ex.ring), ex.qb) == gf::Vector(6, 0));
  CHECK(quotient::to_coords(Polynomial::constant(ex.ring, 1), ex.qb) == gf::Vector{0, 0, 0, 0, 0, 1});
  CHECK(quotient::one(ex.qb) == gf::Vector{0, 0, 0, 0, 0, 1});
  const auto x = quotient::to_coords(mpoly::parse_poly("x", ex.ring), ex.qb);
  CHECK(x == gf::Vector{4, 0, 0, 0, 4, 1});
  CHECK(mpoly::to_string(quotient::from_coords(x, ex.qb)) == "4*y+4*z+1");
}

TEST_CASE("multiplication matrices") {
  const Example1 ex;
  CHECK(quotient::mult_matrix(Polynomial::constant(ex.ring, 1), ex.qb) == gf::Matrix::identity(6));
  CHECK(quotient::mult_matrix(Polynomial(ex.ring), ex.qb).is_zero());
  CHECK(quotient::mult_matrix(mpoly::parse_poly("x + y + z - 1", ex.ring), ex.qb).is_zero());

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = random_poly(rng, ex.ring, 3), g = random_poly(rng, ex.ring, 3);
    const gf::Matrix mf = quotient::mult_matrix(f, ex.qb), mg = quotient::mult_matrix(g, ex.qb);
    CHECK(gf::multiply(ex.qb.field(), mf, mg) == quotient::mult_matrix(f * g, ex.qb));
    CHECK(mf.is_zero() == groebner::normal_form(f, ex.qb.gb()).is_zero());
    const auto a = quotient::to_coords(f, ex.qb), b = quotient::to_coords(g, ex.qb);
    CHECK(quotient::multiply(a, b, ex.qb) == quotient::to_coords(f * g, ex.qb));
    CHECK(gf::apply(ex.qb.field(), mf, b) == quotient::to_coords(f * g, ex.qb));
  }
}

TEST_CASE("Frobenius matrix") {
  const Example3 ex3;
  const gf::Matrix psi = quotient::frobenius_matrix(ex3.qb);
  CHECK(psi == gf::Matrix::from_rows({{0, 0, 2, 2, 0, 0},
                                      {0, 0, 2, 2, 0, 0},
                                      {2, 1, 0, 0, 1, 0},
                                      {0, 2, 2, 2, 0, 0},
                                      {1, 0, 0, 0, 2, 0},
                                      {0, 2, 1, 1, 0, 0}},
                                     6));

  const auto r = mpoly::make_ring(7, {"x", "y"});
  const auto point = quotient::macaulay_basis(ideal_of(r, {"x-3", "y+1"}).groebner_basis());
  CHECK(quotient::frobenius_matrix(point) == gf::Matrix(1, 1));

  const Example1 ex1;
  const gf::Matrix psi1 = quotient::frobenius_matrix(ex1.qb);
  CHECK(psi1.column(5) == gf::Vector(6, 0));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = random_poly(rng, ex1.ring, 4);
    const auto coords = quotient::to_coords(f, ex1.qb);
    CHECK(gf::apply(ex1.qb.field(), psi1, coords) == quotient::to_coords(f.pow(5) - f, ex1.qb));
    CHECK(quotient::power(coords, 5, ex1.qb) == quotient::to_coords(f.pow(5), ex1.qb));
  }
}
