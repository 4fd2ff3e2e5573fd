#pragma once

// Decimal rendering of exact rationals.

#include "fibroots/precfloat.hpp"

#include <string>

namespace fibroots {

/// floor(q * 10^digits) / 10^digits, rendered with exactly `digits` decimals.
std::string decimal_floor(const Rational& q, int digits);
/// ceil(q * 10^digits) / 10^digits, rendered with exactly `digits` decimals.
std::string decimal_ceil(const Rational& q, int digits);

/// Exact decimal when the denominator is of the form 2^a 5^b ("1.5", "-3"),
/// otherwise "num/den".
std::string exact_string(const Rational& q);

/// Smallest d >= 0 with 10^-d <= bound. Requires bound > 0.
int decimals_for(const Rational& bound);

/// Rounded scientific rendering at 128 bits, e.g. "-1.234567890123e-10".
std::string scientific(const Rational& q, int significant = 13);

/// Exact 2^-bits.
Rational pow2_neg(unsigned bits);

}  // namespace fibroots
