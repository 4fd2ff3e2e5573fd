#include "fibroots/binet.hpp"

#include "fibroots/families.hpp"

#include <mpfr.h>

#include <random>
#include <string>

namespace fibroots {

BinetParts binet_parts(const PrecFloat& x, unsigned k) {
    const mpfr_prec_t bits = x.bits();
    const PrecFloat u = pow(x, k);
    const PrecFloat root = sqrt(u * u + PrecFloat(4, bits));
    PrecFloat alpha = ldexp(u + root, -1);
    PrecFloat beta = ldexp(u - root, -1);
    const PrecFloat shift = x - PrecFloat(1, bits);
    // alpha - beta == root exactly in real arithmetic.
    PrecFloat p = (shift + beta) / root;
    PrecFloat q = (shift + alpha) / root;
    return {std::move(alpha), std::move(beta), std::move(p), std::move(q)};
}

PrecFloat binet_eval(unsigned k, unsigned n, const PrecFloat& x) {
    BinetParts parts = binet_parts(x, k);
    return parts.p * pow(parts.alpha, n) - parts.q * pow(parts.beta, n);
}

PrecFloat Eq1Residual::gap() const {
    if (log_space) return abs(log_abs_lhs - log_abs_rhs);
    return abs(lhs - rhs);
}

PrecFloat eq1_limit_numerator(unsigned k, const PrecFloat& x) {
    const mpfr_prec_t bits = x.bits();
    const PrecFloat wide = x.with_bits(2 * bits);
    const PrecFloat xk = pow(wide, k);
    const PrecFloat s = sqrt(xk * xk + PrecFloat(4, 2 * bits));
    PrecFloat num = ldexp(wide - PrecFloat(1, 2 * bits), 1) + xk - s;
    return num.with_bits(bits);
}

Eq1Residual eq1_residual(unsigned k, unsigned n, const PrecFloat& g, std::optional<double> log_limit) {
    if (g.sign() <= 0) throw std::invalid_argument("eq1_residual requires g > 0");
    const mpfr_prec_t bits = g.bits();
    const mpfr_prec_t wide_bits = 2 * bits;
    const PrecFloat wide = g.with_bits(wide_bits);
    const PrecFloat gk = pow(wide, k);
    const PrecFloat s = sqrt(gk * gk + PrecFloat(4, wide_bits));
    const PrecFloat common = ldexp(wide - PrecFloat(1, wide_bits), 1) + gk;
    const PrecFloat denom = common + s;
    if (abs(denom) < ldexp(PrecFloat(1, bits), -static_cast<long>(bits))) {
        throw DenominatorUnderflow("eq1_residual: lhs denominator below working precision");
    }

    Eq1Residual out{PrecFloat(bits), PrecFloat(bits), false, PrecFloat(bits), PrecFloat(bits)};
    const PrecFloat lhs_wide = (common - s) / denom;
    // |base| = (s - g^k) / (s + g^k) = 4 / (s + g^k)^2, free of cancellation.
    const PrecFloat sum = gk + s;
    const PrecFloat base_mag = PrecFloat(4, wide_bits) / (sum * sum);
    const PrecFloat log_base = log(base_mag);
    const PrecFloat log_rhs = log_base * PrecFloat(static_cast<long>(n), wide_bits);

    // Stay well inside the exponent range; ln 2 < 0.7.
    const double limit = log_limit.value_or(0.35 * static_cast<double>(-mpfr_get_emin()));
    if (-log_rhs.to_double() > limit) {
        out.log_space = true;
        out.log_abs_rhs = log_rhs.with_bits(bits);
        out.log_abs_lhs = log(abs(lhs_wide)).with_bits(bits);  // -inf for an exact zero
        return out;
    }
    PrecFloat rhs = pow(base_mag, n);
    if (n % 2 == 1) rhs = -rhs;
    out.lhs = lhs_wide.with_bits(bits);
    out.rhs = rhs.with_bits(bits);
    out.log_abs_rhs = log_rhs.with_bits(bits);
    out.log_abs_lhs = log(abs(lhs_wide)).with_bits(bits);
    return out;
}

CheckReport binet_check(unsigned k_max, unsigned n_max, unsigned samples, const PrecFloat& tolerance, std::uint64_t seed) {
    const mpfr_prec_t bits = tolerance.bits();
    CheckReport report("binet k<=" + std::to_string(k_max) + " n<=" + std::to_string(n_max));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numerator(-2048, 3072);
    PrecFloat worst(bits);
    std::size_t compared = 0;
    for (unsigned s = 0; s < samples; ++s) {
        const Rational x(numerator(rng), 1024);
        const PrecFloat xf(x, bits);  // exact: a dyadic with 13 significant bits
        for (unsigned k = 1; k <= k_max; ++k) {
            const BinetParts parts = binet_parts(xf, k);
            for (unsigned n = 0; n <= n_max; ++n) {
                const PrecFloat a = parts.p * pow(parts.alpha, n);
                const PrecFloat b = parts.q * pow(parts.beta, n);
                const PrecFloat exact(gee(k, n).eval(x), bits);
                const PrecFloat magnitude = abs(a) + abs(b);
                const PrecFloat err = abs((a - b) - exact) / magnitude;
                ++compared;
                if (err > worst) worst = err;
                if (!(err < tolerance)) {
                    report.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " x=" + x.get_str() +
                                " relative error " + err.to_scientific(6));
                }
            }
        }
    }
    report.detail = std::to_string(compared) + " evaluations, max relative error " + worst.to_scientific(6);
    return report;
}

}  // namespace fibroots
