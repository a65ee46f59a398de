#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramcov/category.hpp"
#include "ramcov/covering.hpp"
#include "ramcov/poly_matrix.hpp"
#include "ramcov/polynomial.hpp"
#include "ramcov/power_series.hpp"

namespace ramcov {

inline constexpr std::size_t default_series_order = 20;

/// I - (A_C - I) t
PolyMatrix euler_matrix(const FiniteCategory& c);

/// sum(adj(I - (A_C - I)t)) and det(I - (A_C - I)t) before reduction. The sum
/// of adjugate entries is det(M + J) - det(M) with J the all-ones matrix.
struct EulerFraction {
  Polynomial adjugate_sum;
  Polynomial determinant;
};
EulerFraction euler_fraction(const FiniteCategory& c);

/// The reduced rational function whose Maclaurin series is sum #N̄_n t^n.
RationalFunction euler_rational_function(const FiniteCategory& c);

/// Value of euler_rational_function at t = -1; nullopt when -1 is a pole.
std::optional<Rational> series_euler_characteristic(const FiniteCategory& c);

/// #N̄_n for n = 0..order.
PowerSeries euler_series_coefficients(const FiniteCategory& c, std::size_t order,
                                      Execution exec = Execution::parallel);

/// exp(sum_{m=1}^{order} #N_m z^m / m) modulo z^(order+1).
PowerSeries zeta_truncated(const FiniteCategory& c, std::size_t order, Execution exec = Execution::parallel);

struct RiemannHurwitzReport {
  bool covering_verified = false;
  std::vector<Diagnostic> diagnostics;  // covering rejections, when not verified
  std::optional<Rational> chi_total;    // of the source (covering) category
  std::optional<Rational> chi_base;
  std::uint64_t degree = 0;
  std::uint64_t total_ramification = 0;
  bool definedness_agrees = false;
  bool identity_holds = false;  // chi_total == d chi_base - V; vacuous when both undefined

  bool passed() const { return covering_verified && definedness_agrees && identity_holds; }
};

/// Re-verifies the covering, then checks both clauses of Riemann-Hurwitz.
RiemannHurwitzReport check_riemann_hurwitz(const CategoryFunctor& p);

struct ZetaDivisibilityReport {
  bool covering_verified = false;
  std::vector<Diagnostic> diagnostics;
  std::size_t order = 0;
  std::uint64_t degree = 0;
  std::uint64_t total_ramification = 0;
  std::optional<PowerSeries> total_zeta;  // ζ of the source category
  std::optional<PowerSeries> predicted;   // ζ_C^d (1 - z)^V
  std::optional<std::size_t> first_difference;

  bool passed() const { return covering_verified && total_zeta && !first_difference; }
};

ZetaDivisibilityReport check_zeta_divisibility(const CategoryFunctor& p, std::size_t order = default_series_order,
                                               Execution exec = Execution::parallel);

}  // namespace ramcov
