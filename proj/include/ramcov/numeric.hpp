#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ramcov {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const Integer& value);

/// Always "p/q" with q > 0, including integers ("-4/1").
std::string to_fraction(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

Integer parse_decimal(std::string_view text);

}  // namespace ramcov
