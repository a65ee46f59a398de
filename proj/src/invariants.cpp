#include "ramcov/invariants.hpp"

#include <stdexcept>

#include "ramcov/nerve.hpp"

namespace ramcov {

PolyMatrix euler_matrix(const FiniteCategory& c) {
  const auto reduced = reduced_adjacency_matrix(c);
  const std::size_t n = c.object_count();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational b(reduced(i, j));
      m(i, j) = Polynomial(std::vector<Rational>{Rational(i == j ? 1 : 0), -b});
    }
  return m;
}

EulerFraction euler_fraction(const FiniteCategory& c) {
  const PolyMatrix m = euler_matrix(c);
  PolyMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) shifted(i, j) += Polynomial(1);
  Polynomial det = determinant(m);
  return {determinant(std::move(shifted)) - det, det};
}

RationalFunction euler_rational_function(const FiniteCategory& c) {
  auto [numerator, denominator] = euler_fraction(c);
  return RationalFunction(std::move(numerator), std::move(denominator));
}

std::optional<Rational> series_euler_characteristic(const FiniteCategory& c) {
  return euler_rational_function(c).evaluate(Rational(-1));
}

PowerSeries euler_series_coefficients(const FiniteCategory& c, std::size_t order, Execution exec) {
  const auto counts = chain_counts(c, order, true, exec);
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return PowerSeries(order, std::move(coeffs));
}

PowerSeries zeta_truncated(const FiniteCategory& c, std::size_t order, Execution exec) {
  if (order < 1) throw std::invalid_argument("zeta truncation order must be at least 1");
  const auto counts = chain_counts(c, order, false, exec);
  PowerSeries exponent(order);
  for (std::size_t m = 1; m <= order; ++m) exponent[m] = Rational(counts[m], Integer(static_cast<unsigned long>(m)));
  for (std::size_t m = 1; m <= order; ++m) exponent[m].canonicalize();
  return exponent.exp();
}

RiemannHurwitzReport check_riemann_hurwitz(const CategoryFunctor& p) {
  RiemannHurwitzReport report;
  const auto profile = check_ramified_covering(p);
  if (!profile.ok()) {
    report.diagnostics = profile.diagnostics;
    return report;
  }
  report.covering_verified = true;
  report.degree = profile->degree;
  report.total_ramification = profile->total_ramification;
  report.chi_total = series_euler_characteristic(p.source());
  report.chi_base = series_euler_characteristic(p.target());
  report.definedness_agrees = report.chi_total.has_value() == report.chi_base.has_value();
  if (report.chi_total && report.chi_base) {
    const Rational d(Integer(static_cast<unsigned long>(report.degree)));
    const Rational v(Integer(static_cast<unsigned long>(report.total_ramification)));
    report.identity_holds = *report.chi_total == d * *report.chi_base - v;
  } else {
    report.identity_holds = report.definedness_agrees;
  }
  return report;
}

ZetaDivisibilityReport check_zeta_divisibility(const CategoryFunctor& p, std::size_t order, Execution exec) {
  ZetaDivisibilityReport report;
  report.order = order;
  const auto profile = check_ramified_covering(p);
  if (!profile.ok()) {
    report.diagnostics = profile.diagnostics;
    return report;
  }
  report.covering_verified = true;
  report.degree = profile->degree;
  report.total_ramification = profile->total_ramification;

  const PowerSeries total = zeta_truncated(p.source(), order, exec);
  const PowerSeries base = zeta_truncated(p.target(), order, exec);
  const PowerSeries predicted = base.pow(static_cast<long>(report.degree)) *
                                PowerSeries::one_minus_z(order).pow(static_cast<long>(report.total_ramification));
  for (std::size_t k = 0; k <= order; ++k)
    if (total[k] != predicted[k]) {
      report.first_difference = k;
      break;
    }
  report.total_zeta = total;
  report.predicted = predicted;
  return report;
}

}  // namespace ramcov
