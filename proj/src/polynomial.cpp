#include "ramcov/polynomial.hpp"

#include <stdexcept>

namespace ramcov {

Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> quotient(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
  std::vector<Rational> rem = a.coeffs_;
  const Rational& lead = b.leading();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const Rational q = rem[k + b.coeffs_.size() - 1] / lead;
    quotient[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= q * b.coeffs_[j];
  }
  return {Polynomial(std::move(quotient)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    std::string term = coeffs_[k].get_str();
    if (k == 1) term += "*" + variable;
    if (k > 1) term += "*" + variable + "^" + std::to_string(k);
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
  const Polynomial g = gcd(numerator, denominator);
  num_ = Polynomial::divmod(numerator, g).first;
  den_ = Polynomial::divmod(denominator, g).first;
  const Rational inv = 1 / den_.leading();
  num_ *= Polynomial(inv);
  den_ *= Polynomial(inv);
}

std::optional<Rational> RationalFunction::evaluate(const Rational& t) const {
  const Rational d = den_.evaluate(t);
  if (d == 0) return std::nullopt;
  return num_.evaluate(t) / d;
}

std::vector<Rational> RationalFunction::maclaurin(std::size_t order) const {
  const Rational d0 = den_.coefficient(0);
  if (d0 == 0) throw std::domain_error("denominator vanishes at 0; no Maclaurin expansion");
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = num_.coefficient(n);
    for (std::size_t k = 1; k <= n && k <= static_cast<std::size_t>(den_.degree()); ++k)
      acc -= den_.coefficient(k) * out[n - k];
    out[n] = acc / d0;
  }
  return out;
}

}  // namespace ramcov
