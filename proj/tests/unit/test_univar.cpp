#include <doctest.h>

#include <random>

#include "fpd/mpoly/parse.hpp"
#include "fpd/univar/factor.hpp"

using namespace fpd;
using mpoly::Polynomial;

namespace {

std::vector<std::string> factor_strings(const univar::Factorization& fz) {
  std::vector<std::string> out;
  for (const auto& f : fz.factors) out.push_back(mpoly::to_string(f));
  return out;
}

}  // namespace

TEST_CASE("factorization examples") {
  const auto r3 = mpoly::make_ring(3, {"x"});
  const auto ex3 = univar::factor(mpoly::parse_poly("x^6+x^5+x^4+2", r3));
  CHECK(factor_strings(ex3) == std::vector<std::string>{"x+1", "x^2+x+2", "x^3+2*x^2+1"});
  CHECK(ex3.t == 3);
  CHECK(ex3.leading_coefficient == 1);

  const auto r2 = mpoly::make_ring(2, {"x"});
  const auto sq = univar::factor(mpoly::parse_poly("x^2+1", r2));
  CHECK(factor_strings(sq) == std::vector<std::string>{"x^2+1"});
  CHECK(sq.t == 1);

  CHECK(factor_strings(univar::factor(mpoly::parse_poly("x^2-1", r3))) == std::vector<std::string>{"x+1", "x+2"});

  const auto lead = univar::factor(mpoly::parse_poly("2*x^2+2*x", r3));
  CHECK(lead.leading_coefficient == 2);
  CHECK(factor_strings(lead) == std::vector<std::string>{"x", "x+1"});
}

TEST_CASE("factorization errors") {
  const auto r = mpoly::make_ring(5, {"x"});
  CHECK_THROWS_AS(univar::factor(mpoly::parse_poly("3", r)), univar::ConstantPolynomial);
  CHECK_THROWS_AS(univar::factor(Polynomial(r)), univar::ConstantPolynomial);
  const auto r2 = mpoly::make_ring(5, {"x", "y"});
  CHECK_THROWS_AS(univar::factor(mpoly::parse_poly("x", r2)), std::invalid_argument);
}

TEST_CASE("product identity on random polynomials") {
  std::mt19937_64 rng(77);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto r = mpoly::make_ring(p, {"x"});
    for (int trial = 0; trial < 25; ++trial) {
      const unsigned deg = 1 + rng() % 8;
      std::vector<mpoly::Term> terms{{1, mpoly::Monomial::variable(1, 0, static_cast<mpoly::Exponent>(deg))}};
      for (unsigned e = 0; e < deg; ++e)
        terms.push_back({static_cast<gf::Elem>(rng() % p), mpoly::Monomial::variable(1, 0, static_cast<mpoly::Exponent>(e))});
      const Polynomial f = Polynomial::from_terms(r, terms);
      const auto fz = univar::factor(f);
      Polynomial prod = Polynomial::constant(r, fz.leading_coefficient);
      for (const auto& g : fz.factors) {
        CHECK(g.leading_coeff() == 1);
        prod = prod * g;
      }
      CHECK(prod == f);
      CHECK(fz.t == fz.factors.size());
    }
  }
}
