#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramcov/numeric.hpp"

namespace ramcov {

/// Univariate polynomial over Q; coefficient k multiplies t^k. Trailing zeros
/// are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& t) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; throws std::domain_error when dividing by zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  /// "4 + 4*t", "0" for zero.
  std::string to_string(const std::string& variable = "t") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// numerator / denominator in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// nullopt when t is a pole of the reduced form.
  std::optional<Rational> evaluate(const Rational& t) const;

  /// Maclaurin coefficients 0..order. Requires denominator(0) != 0.
  std::vector<Rational> maclaurin(std::size_t order) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace ramcov
