#pragma once

// Closed-form evaluation of G_n^(k) through the characteristic roots of
// c_n = x^k c_{n-1} + c_{n-2}, and the root equation that follows from it.
//
//   alpha(u) = (u + sqrt(u^2 + 4)) / 2      beta(u) = (u - sqrt(u^2 + 4)) / 2
//   p(x) = ((x - 1) + beta(x^k)) / (alpha(x^k) - beta(x^k))
//   q(x) = ((x - 1) + alpha(x^k)) / (alpha(x^k) - beta(x^k))
//   G_n(x) = p(x) alpha(x^k)^n - q(x) beta(x^k)^n
//
// At a root g of G_n, p/q = (beta/alpha)^n, which written out in g is
//
//   (2(g-1) + g^k - s) / (2(g-1) + g^k + s) = (-1)^n (1 - 2 g^k / (g^k + s))^n,
//   s = sqrt(g^(2k) + 4).

#include "fibroots/precfloat.hpp"
#include "fibroots/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace fibroots {

class DenominatorUnderflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct BinetParts {
    PrecFloat alpha;
    PrecFloat beta;
    PrecFloat p;
    PrecFloat q;
};

/// alpha, beta evaluated at x^k, and p, q at x; all at x.bits() precision.
BinetParts binet_parts(const PrecFloat& x, unsigned k);

/// p alpha^n - q beta^n at x.bits() precision. Powers use repeated squaring.
PrecFloat binet_eval(unsigned k, unsigned n, const PrecFloat& x);

/// Both sides of the root equation at g.
///
/// When |rhs| would leave the floating exponent range, `log_space` is set and
/// only the log magnitudes are meaningful; lhs/rhs then hold zero.
struct Eq1Residual {
    PrecFloat lhs;
    PrecFloat rhs;
    bool log_space = false;
    PrecFloat log_abs_lhs;
    PrecFloat log_abs_rhs;

    /// |lhs - rhs| (in log mode, |log|lhs| - log|rhs||).
    PrecFloat gap() const;
};

/// Evaluates the root equation at g > 0 with g.bits() of precision; the
/// square root and the lhs are formed at twice that width before rounding.
/// Throws DenominatorUnderflow if the lhs denominator is below working
/// precision, std::invalid_argument for g <= 0.
///
/// log_limit overrides the natural-log magnitude of rhs beyond which the
/// result switches to log space (default: about half the exponent range).
Eq1Residual eq1_residual(unsigned k, unsigned n, const PrecFloat& g, std::optional<double> log_limit = std::nullopt);

/// Compares binet_eval with the exact value of G_n^(k) at `samples` dyadic
/// points x = m / 1024 in [-2, 3], drawn from a seeded generator, for every
/// 1 <= k <= k_max and 0 <= n <= n_max. The error is taken relative to
/// |p alpha^n| + |q beta^n|, the magnitude before cancellation, so points
/// near a root are not penalized for the size of the result.
CheckReport binet_check(unsigned k_max, unsigned n_max, unsigned samples, const PrecFloat& tolerance,
                        std::uint64_t seed = 1);

/// Numerator of the lhs, 2(x-1) + x^k - sqrt(x^(2k) + 4); its unique positive
/// zero is the limit of the maximal roots.
PrecFloat eq1_limit_numerator(unsigned k, const PrecFloat& x);

}  // namespace fibroots
