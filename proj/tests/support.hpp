#pragma once

// Independent reference computations used by the tests. Nothing here calls the
// library's series, matrix or enumeration code.

#include <cstdint>
#include <string>
#include <vector>

#include "ramcov/category.hpp"
#include "ramcov/constructions.hpp"
#include "ramcov/numeric.hpp"

namespace oracle {

using ramcov::Integer;
using ramcov::Rational;
using Series = std::vector<Rational>;

inline ramcov::CategoryPtr build(const ramcov::CategoryData& data) { return ramcov::make_category(data); }

// Chains of length n found by trying every sequence of morphisms.
inline Integer brute_force_chains(const ramcov::FiniteCategory& c, std::size_t n, bool nondegenerate) {
  if (n == 0) return Integer(static_cast<unsigned long>(c.object_count()));
  std::vector<std::uint32_t> allowed;
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f)
    if (!nondegenerate || !c.is_identity(ramcov::MorphismIndex{f})) allowed.push_back(f);
  if (allowed.empty()) return 0;
  std::vector<std::size_t> digits(n, 0);
  Integer count = 0;
  while (true) {
    bool composable = true;
    for (std::size_t i = 0; i + 1 < n && composable; ++i)
      composable = c.target(ramcov::MorphismIndex{allowed[digits[i]]}) ==
                   c.source(ramcov::MorphismIndex{allowed[digits[i + 1]]});
    if (composable) ++count;
    std::size_t k = 0;
    while (k < n && ++digits[k] == allowed.size()) digits[k++] = 0;
    if (k == n) break;
  }
  return count;
}

inline Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// exp(f) = sum_k f^k / k! for f with zero constant term.
inline Series exp_by_taylor(const Series& f) {
  Series out(f.size(), Rational(0)), power(f.size(), Rational(0));
  out[0] = 1;
  power[0] = 1;
  Integer factorial = 1;
  for (std::size_t k = 1; k < f.size(); ++k) {
    power = multiply(power, f);
    factorial *= static_cast<unsigned long>(k);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] += power[i] / Rational(factorial);
  }
  return out;
}

// (1 - z)^(-a), a >= 0, by binomial coefficients C(a+n-1, n).
inline Series one_minus_z_neg_power(unsigned long a, std::size_t order) {
  Series out(order + 1, Rational(0));
  out[0] = 1;
  if (a == 0) return out;
  for (std::size_t n = 1; n <= order; ++n) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), a + n - 1, n);
    out[n] = Rational(binom);
  }
  return out;
}

// (1 - z)^V for V >= 0.
inline Series one_minus_z_power(unsigned long v, std::size_t order) {
  Series out(order + 1, Rational(0));
  for (std::size_t n = 0; n <= std::min<std::size_t>(order, v); ++n) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), v, n);
    out[n] = Rational(n % 2 ? -binom : binom);
  }
  return out;
}

// (1 - z)^(-a) exp(b z / (1 - z)).
inline Series closed_form_zeta(unsigned long a, long b, std::size_t order) {
  Series inner(order + 1, Rational(0));
  for (std::size_t n = 1; n <= order; ++n) inner[n] = b;
  return multiply(one_minus_z_neg_power(a, order), exp_by_taylor(inner));
}

// exp(sum_m #N_m z^m / m) from brute-force chain counts.
inline Series zeta_by_brute_force(const ramcov::FiniteCategory& c, std::size_t order) {
  Series log_part(order + 1, Rational(0));
  for (std::size_t m = 1; m <= order; ++m) {
    log_part[m] = Rational(brute_force_chains(c, m, false), Integer(static_cast<unsigned long>(m)));
    log_part[m].canonicalize();
  }
  return exp_by_taylor(log_part);
}

inline Series from_strings(const std::vector<std::string>& values) {
  Series out;
  for (const auto& v : values) out.emplace_back(v);
  for (auto& v : out) v.canonicalize();
  return out;
}

// Frozen expansions computed offline with an external computer algebra system.
inline Series frozen_diamond_zeta() {
  return from_strings({"1", "8", "38", "416/3", "1285/3", "17648/15", "133132/45", "2186144/315"});
}
inline Series frozen_diamond_cover_zeta() {
  return from_strings({"1", "28", "414", "12884/3", "105167/3", "1197584/5", "64055608/45", "2378993968/315"});
}
inline Series frozen_wedge_cover_zeta() {
  return from_strings({"1", "5", "16", "124/3", "281/3", "2909/15", "3380/9", "217484/315"});
}

}  // namespace oracle
