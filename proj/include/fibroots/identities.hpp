#pragma once

// Checks for the bivariate and Lucas-type identities. Radical-free
// identities are compared exactly; the Jacobsthal-Lucas identity involves
// sqrt(2) and is checked in floating point with a precision-relative bound.

#include "fibroots/arith.hpp"
#include "fibroots/report.hpp"

#include <optional>
#include <string>

namespace fibroots {

/// f_n(x, y^2) == x y^(n-1) F_{n-1}(x/y) + y^(n+2) F_{n-2}(x/y), with the
/// right side homogenized so no negative powers appear. Requires n >= 2.
CheckReport affine_check(unsigned n);

/// The double-binomial expansion
///   sum_k C(n-k-1, k) x^(n-2k) y^a(k) + sum_k C(n-k-2, k) x^(n-2k-2) y^b(k)
/// under two readings of the y-exponents: literal (a = k, b = k + 2) and
/// squared (a = 2k, b = 2k + 4).
struct SplitReport {
    unsigned n = 0;
    bool literal_matches = false;
    bool squared_matches = false;
    /// Literal reading compared against f_n(x, y) instead of f_n(x, y^2).
    bool literal_matches_unsquared = false;
    std::optional<std::string> literal_first_mismatch;
    std::optional<std::string> squared_first_mismatch;
};

SplitReport fib_coeff_split_check(unsigned n);
BiPolynomial fib_coeff_split(unsigned n, bool squared);

/// 2^((n-1)/2) F_{n-1}(1/sqrt 2) + 2^(n/2+1) F_{n-2}(1/sqrt 2) at `bits`
/// precision. Requires n >= 2.
PrecFloat jacobsthal_identity_value(unsigned n, mpfr_prec_t bits);

/// Compares jacobsthal_identity_value with J_n = f_n(1, 2) within
/// 2^(8 - bits) relative; also records whether f_n(2, 1) would have matched.
struct JacobsthalReport {
    unsigned n = 0;
    Integer expected;          // f_n(1, 2)
    Integer swapped_argument;  // f_n(2, 1)
    PrecFloat value;
    PrecFloat relative_error;
    bool passed = false;
    bool swapped_matches = false;
};

JacobsthalReport jacobsthal_identity_check(unsigned n, mpfr_prec_t bits);

/// x^n h_n(1/x^2) == L_n(x); fails if a negative exponent survives.
CheckReport lucas_relation_check(unsigned n);

/// Index shift s with f_m(x, 1) == F_{m+s}(x) for every 0 <= m <= max_n,
/// searched over -2..2; nullopt if none fits.
std::optional<int> bfp2_fib_index_shift(unsigned max_n);

}  // namespace fibroots
