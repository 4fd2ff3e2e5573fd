#pragma once

#include "fibroots/arith.hpp"

#include <doctest.h>

#include <random>

namespace doctest {

template <>
struct StringMaker<fibroots::Polynomial> {
    static String convert(const fibroots::Polynomial& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<fibroots::BiPolynomial> {
    static String convert(const fibroots::BiPolynomial& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<fibroots::Rational> {
    static String convert(const fibroots::Rational& q) { return q.get_str().c_str(); }
};

}  // namespace doctest

namespace testing {

using fibroots::Integer;
using fibroots::Polynomial;
using fibroots::Rational;

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    return Polynomial(std::move(c));
}

// Largest x in [lo, hi] where the double-evaluated polynomial changes sign on
// a uniform grid, refined by plain bisection. A deliberately naive oracle.
inline double grid_max_root(const Polynomial& p, double lo, double hi, int steps = 30000) {
    auto f = [&](double x) {
        double acc = 0;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    };
    const double h = (hi - lo) / steps;
    for (int i = steps; i > 0; --i) {
        double a = lo + (i - 1) * h, b = lo + i * h;
        if (f(a) == 0) return a;
        if ((f(a) < 0) != (f(b) < 0)) {
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                if ((f(a) < 0) != (f(m) < 0)) b = m;
                else a = m;
            }
            return 0.5 * (a + b);
        }
    }
    return lo - 1;
}

}  // namespace testing
