#include "ramcov/numeric.hpp"

#include <stdexcept>

namespace ramcov {

std::string to_decimal(const Integer& value) { return value.get_str(10); }

std::string to_fraction(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_num().get_str(10) + "/" + canonical.get_den().get_str(10);
}

Integer parse_decimal(std::string_view text) {
  std::string s(text);
  std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = digits_from; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_decimal(text));
  Integer num = parse_decimal(text.substr(0, slash));
  Integer den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ramcov
