#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sturmian {

/// Exact arbitrary-precision rational. Always kept canonical by gmpxx.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a finite decimal ("0.381966", "-1.5e-3") exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double (its binary expansion). Throws on NaN/inf.
Rational rational_from_double(double value);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

long double to_long_double(const Rational& value);

/// floor(value) as an integer.
Integer floor_of(const Rational& value);

/// Exact square root when the value is the square of a rational.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace sturmian
