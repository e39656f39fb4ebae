#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace confstudy {

// Arbitrary precision rational, always kept in canonical form
// (positive denominator, reduced).
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional leading '-'. Throws SchemaError.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q".
std::string to_string(const Rational& value);

// Decimal rendering rounded half away from zero to `digits` fractional
// digits, trailing zeros trimmed. Deterministic.
std::string to_decimal(const Rational& value, int digits = 12);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& value) { return sgn(value); }

// Exact square root when the argument is the square of a rational.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace confstudy
