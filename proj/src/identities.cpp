#include "fibroots/identities.hpp"

#include "fibroots/families.hpp"

#include <string>

namespace fibroots {

namespace {

std::string first_difference(const BiPolynomial& got, const BiPolynomial& want) {
    const BiPolynomial diff = got - want;
    if (diff.is_zero()) return {};
    const auto& [e, c] = *diff.terms().rbegin();
    return "x^" + std::to_string(e.first) + " y^" + std::to_string(e.second) + ": got " + got.coeff(e.first, e.second).get_str() +
           ", expected " + want.coeff(e.first, e.second).get_str();
}

}  // namespace

CheckReport affine_check(unsigned n) {
    if (n < 2) throw std::invalid_argument("affine_check requires n >= 2");
    CheckReport report{"affine n=" + std::to_string(n)};
    const BiPolynomial lhs = bfp2(n).substitute_y_power(2);
    // x y^(n-1) F_{n-1}(x/y) = x * homogenize(F_{n-1}, n-1)
    // y^(n+2) F_{n-2}(x/y)   = homogenize(F_{n-2}, n+2)
    const BiPolynomial rhs = BiPolynomial::x() * homogenize(fib(n - 1), n - 1) + homogenize(fib(n - 2), n + 2);
    if (!(lhs == rhs)) report.fail(first_difference(rhs, lhs));
    report.detail = std::to_string(lhs.terms().size()) + " terms compared";
    return report;
}

BiPolynomial fib_coeff_split(unsigned n, bool squared) {
    const long nn = n;
    BiPolynomial out;
    for (long k = 0; nn - 2 * k >= 0; ++k) {
        Integer c = binomial(nn - k - 1, k);
        if (c != 0) out += BiPolynomial::term(c, static_cast<unsigned>(nn - 2 * k), static_cast<unsigned>(squared ? 2 * k : k));
    }
    for (long k = 0; nn - 2 * k - 2 >= 0; ++k) {
        Integer c = binomial(nn - k - 2, k);
        if (c != 0) {
            out += BiPolynomial::term(c, static_cast<unsigned>(nn - 2 * k - 2),
                                      static_cast<unsigned>(squared ? 2 * k + 4 : k + 2));
        }
    }
    return out;
}

SplitReport fib_coeff_split_check(unsigned n) {
    if (n < 2) throw std::invalid_argument("fib_coeff_split_check requires n >= 2");
    SplitReport report;
    report.n = n;
    const BiPolynomial target = bfp2(n).substitute_y_power(2);
    const BiPolynomial literal = fib_coeff_split(n, false);
    const BiPolynomial squared = fib_coeff_split(n, true);
    report.literal_matches = literal == target;
    report.squared_matches = squared == target;
    report.literal_matches_unsquared = literal == bfp2(n);
    if (!report.literal_matches) report.literal_first_mismatch = first_difference(literal, target);
    if (!report.squared_matches) report.squared_first_mismatch = first_difference(squared, target);
    return report;
}

PrecFloat jacobsthal_identity_value(unsigned n, mpfr_prec_t bits) {
    if (n < 2) throw std::invalid_argument("jacobsthal_identity_value requires n >= 2");
    const PrecFloat sqrt2 = sqrt(PrecFloat(2, bits));
    const PrecFloat at = PrecFloat(1, bits) / sqrt2;
    // 2^((n-1)/2) and 2^(n/2 + 1) as powers of sqrt 2.
    const PrecFloat first = pow(sqrt2, n - 1) * fib(n - 1).eval(at);
    const PrecFloat second = pow(sqrt2, n + 2) * fib(n - 2).eval(at);
    return first + second;
}

JacobsthalReport jacobsthal_identity_check(unsigned n, mpfr_prec_t bits) {
    JacobsthalReport report;
    report.n = n;
    report.expected = jacobsthal_lucas(n);
    report.swapped_argument = bfp2(n).eval(2, 1);
    report.value = jacobsthal_identity_value(n, bits);
    const PrecFloat exact(report.expected, bits);
    report.relative_error = abs(report.value - exact) / abs(exact);
    const PrecFloat tol = ldexp(PrecFloat(1, bits), 8 - static_cast<long>(bits));
    report.passed = report.relative_error < tol;
    const PrecFloat swapped(report.swapped_argument, bits);
    report.swapped_matches = abs(report.value - swapped) / abs(swapped) < tol;
    return report;
}

CheckReport lucas_relation_check(unsigned n) {
    CheckReport report{"lucas n=" + std::to_string(n)};
    // x^n * sum_j h_j x^(-2j): the exponent of term j is n - 2j.
    const Polynomial h = hseq(n);
    std::vector<Integer> expanded(n + 1);
    for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
        const long exponent = static_cast<long>(n) - 2 * static_cast<long>(j);
        if (h.coeffs()[j] == 0) continue;
        if (exponent < 0) {
            report.fail("negative exponent " + std::to_string(exponent) + " from h_n coefficient of x^" + std::to_string(j));
            return report;
        }
        expanded[static_cast<std::size_t>(exponent)] += h.coeffs()[j];
    }
    const Polynomial lhs(std::move(expanded));
    if (lhs != lucas(n)) report.fail("x^n h_n(1/x^2) = " + lhs.to_string() + " but L_n = " + lucas(n).to_string());
    report.detail = "no negative exponents";
    return report;
}

std::optional<int> bfp2_fib_index_shift(unsigned max_n) {
    for (int shift = -2; shift <= 2; ++shift) {
        bool fits = true;
        for (unsigned m = 0; m <= max_n && fits; ++m) {
            const long target = static_cast<long>(m) + shift;
            if (target < 0) {
                fits = false;
                break;
            }
            fits = bfp2(m).at_y(1) == fib(static_cast<unsigned>(target));
        }
        if (fits) return shift;
    }
    return std::nullopt;
}

}  // namespace fibroots
