#include "doctest.h"
#include "ramcov/poly_matrix.hpp"
#include "ramcov/polynomial.hpp"
#include "ramcov/power_series.hpp"
#include "support.hpp"

#include <random>

using namespace ramcov;

namespace {

Polynomial poly(std::vector<long> c) {
  std::vector<Rational> q;
  for (auto v : c) q.emplace_back(v);
  return Polynomial(q);
}

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<Rational> c;
  const int degree = static_cast<int>(rng() % (max_degree + 1));
  for (int i = 0; i <= degree; ++i)
    c.emplace_back(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(rng() % 3 + 1));
  for (auto& v : c) v.canonicalize();
  return Polynomial(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto p = poly({1, 2, 1});
  const auto q = poly({1, 1});
  CHECK(q * q == p);
  CHECK(p.degree() == 2);
  CHECK(Polynomial().degree() == -1);
  CHECK(p.evaluate(Rational(-1)) == 0);
  CHECK(p - p == Polynomial());
  CHECK(-q + q == Polynomial());
  const auto [quot, rem] = Polynomial::divmod(p, q);
  CHECK(quot == q);
  CHECK(rem == Polynomial());
  CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial()), std::domain_error);
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  CHECK(poly({2, 4}).monic() == Polynomial(std::vector<Rational>{Rational(1, 2), Rational(1)}));
  CHECK(poly({4, 4}).to_string() == "4 + 4*t");
}

TEST_CASE("division identity on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 6);
    const auto b = random_poly(rng, 3);
    if (b.degree() < 0) continue;
    const auto [q, r] = Polynomial::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("rational functions reduce soundly") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto common = random_poly(rng, 2);
    const auto num = random_poly(rng, 3);
    auto den = random_poly(rng, 3);
    if (common.degree() < 0 || den.degree() < 0) continue;
    const RationalFunction unreduced(num * common, den * common);
    const RationalFunction reduced(num, den);
    CHECK(unreduced == reduced);
    if (reduced.numerator().degree() >= 0) {
      CHECK(gcd(reduced.numerator(), reduced.denominator()).degree() == 0);
    }
    CHECK(reduced.denominator().leading() == 1);
    // Cross-multiplication: num * reduced.den == den * reduced.num.
    CHECK(num * reduced.denominator() == den * reduced.numerator());
  }
  const RationalFunction f(poly({-1, 0, 1}), poly({1, 1}));
  CHECK(f.denominator() == Polynomial(1));
  CHECK(f.evaluate(Rational(-1)) == Rational(-2));
  const RationalFunction pole(poly({1}), poly({1, 1}));
  CHECK_FALSE(pole.evaluate(Rational(-1)).has_value());
  const auto geometric = RationalFunction(poly({1}), poly({1, -1})).maclaurin(5);
  CHECK(geometric == std::vector<Rational>(6, Rational(1)));
}

TEST_CASE("exp and log are inverse and agree with the Taylor oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries f(8);
    for (std::size_t k = 1; k <= 8; ++k) f[k] = Rational(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(k));
    for (std::size_t k = 1; k <= 8; ++k) f[k].canonicalize();
    const auto e = f.exp();
    CHECK(e.coefficients() == oracle::exp_by_taylor(f.coefficients()));
    CHECK(e.log() == f);
    CHECK(e * e.inverse() == PowerSeries::one(8));
    CHECK(e.pow(3) == e * e * e);
    CHECK(e.pow(-2) * e.pow(2) == PowerSeries::one(8));
    CHECK(e.pow(0) == PowerSeries::one(8));
  }
}

TEST_CASE("closed forms against frozen expansions") {
  const auto check = [](unsigned long a, long b, const oracle::Series& frozen) {
    CHECK(oracle::closed_form_zeta(a, b, frozen.size() - 1) == frozen);
    PowerSeries inner(frozen.size() - 1);
    for (std::size_t n = 1; n < frozen.size(); ++n) inner[n] = b;
    const auto series = PowerSeries::one_minus_z(frozen.size() - 1).pow(-static_cast<long>(a)) * inner.exp();
    CHECK(series.coefficients() == frozen);
  };
  check(4, 4, oracle::frozen_diamond_zeta());
  check(12, 16, oracle::frozen_diamond_cover_zeta());
  check(3, 2, oracle::frozen_wedge_cover_zeta());
}

TEST_CASE("Bareiss determinant matches cofactor expansion and the adjugate identity holds") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, rng() % 3 == 0 ? 1 : 0);
    const auto det = determinant(m);
    CHECK(det == determinant_by_cofactors(m));
    const auto adj = adjugate_by_cofactors(m);
    const auto product = m * adj;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(product(i, j) == (i == j ? det : Polynomial()));
    // Sum of adjugate entries equals det(M + J) - det(M).
    auto shifted = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = shifted(i, j) + Polynomial(1);
    CHECK(entry_sum(adj) == determinant(shifted) - det);
  }
}

TEST_CASE("singular and zero matrices") {
  PolyMatrix zero(3, 3);
  CHECK(determinant(zero) == Polynomial());
  PolyMatrix rank_one(2, 2);
  rank_one(0, 0) = poly({1, 1});
  rank_one(0, 1) = poly({2});
  rank_one(1, 0) = poly({1, 1}) * poly({3});
  rank_one(1, 1) = poly({6});
  CHECK(determinant(rank_one) == Polynomial());
  CHECK(determinant_by_cofactors(rank_one) == Polynomial());
}
