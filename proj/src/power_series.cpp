#include "ramcov/power_series.hpp"

#include <cassert>
#include <stdexcept>

namespace ramcov {

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1, Rational(0));
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s[0] = 1;
  return s;
}

PowerSeries PowerSeries::one_minus_z(std::size_t order) {
  PowerSeries s = one(order);
  if (order >= 1) s[1] = -1;
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  assert(o.order() == order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  assert(o.order() == order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  assert(a.order() == b.order());
  const std::size_t m = a.order();
  PowerSeries out(m);
  for (std::size_t i = 0; i <= m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= m; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

// g = exp(f)  <=>  g' = f' g, i.e. n g_n = sum_{k=1}^{n} k f_k g_{n-k}.
PowerSeries PowerSeries::exp() const {
  if (coeffs_[0] != 0) throw std::domain_error("exp of a series with nonzero constant term");
  const std::size_t m = order();
  PowerSeries g(m);
  g[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (coeffs_[k] != 0) acc += Rational(static_cast<long>(k)) * coeffs_[k] * g[n - k];
    g[n] = acc / Rational(static_cast<long>(n));
  }
  return g;
}

// f = log(g)  <=>  g f' = g', i.e. n f_n = n g_n - sum_{k=1}^{n-1} k f_k g_{n-k}.
PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != 1) throw std::domain_error("log of a series whose constant term is not 1");
  const std::size_t m = order();
  PowerSeries f(m);
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = Rational(static_cast<long>(n)) * coeffs_[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(static_cast<long>(k)) * f[k] * coeffs_[n - k];
    f[n] = acc / Rational(static_cast<long>(n));
  }
  return f;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("inverse of a series with zero constant term");
  const std::size_t m = order();
  PowerSeries out(m);
  out[0] = 1 / coeffs_[0];
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out[n - k];
    out[n] = -acc * out[0];
  }
  return out;
}

PowerSeries PowerSeries::pow(long exponent) const {
  PowerSeries base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  PowerSeries result = one(order());
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace ramcov
