#pragma once

#include <vector>

#include "ramcov/numeric.hpp"

namespace ramcov {

/// Formal power series in z truncated at z^order; every operation is exact
/// modulo z^(order+1).
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
  PowerSeries(std::size_t order, std::vector<Rational> coefficients);

  static PowerSeries one(std::size_t order);
  /// 1 - z
  static PowerSeries one_minus_z(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& scalar);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Requires a zero constant term (std::domain_error otherwise).
  PowerSeries exp() const;
  /// Requires constant term 1 (std::domain_error otherwise).
  PowerSeries log() const;
  /// Requires a nonzero constant term.
  PowerSeries inverse() const;
  /// Integer power; negative exponents go through inverse().
  PowerSeries pow(long exponent) const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace ramcov
