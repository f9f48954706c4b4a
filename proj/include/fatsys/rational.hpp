#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fatsys {

using Rational = mpq_class;

/// Lossless "p/q" form in lowest terms; integers are written as "p/1".
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

}  // namespace fatsys
