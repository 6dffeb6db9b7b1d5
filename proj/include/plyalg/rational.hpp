#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plyalg {

// Exact coefficients. mpq_class keeps fractions canonical after every
// arithmetic operation.
using Rational = mpq_class;

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q", "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

} // namespace plyalg
