#include "fibroots/convergence.hpp"
#include "fibroots/decimal.hpp"
#include "fibroots/families.hpp"

#include "support.hpp"

#include <cmath>

using namespace fibroots;

TEST_CASE("k = 1 table") {
    const ConvergenceReport r = converge_table(1, 12, default_width());
    REQUIRE(r.rows.size() == 12);
    CHECK(r.passed());
    CHECK(r.xi_enclosure.is_point());
    CHECK(r.xi_enclosure.lo == Rational(3, 2));
    CHECK(r.rows[0].g_enclosure.is_point());
    CHECK(r.rows[0].g_enclosure.lo == 1);

    // g_2 is the golden ratio; g_3 is the real root of x^3 - x^2 - 1.
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(r.rows[1].g_enclosure.midpoint().get_d() == doctest::Approx(phi).epsilon(1e-14));
    const double g3 = testing::grid_max_root(Polynomial{-1, 0, -1, 1}, 0.0, 3.0);
    CHECK(r.rows[2].g_enclosure.midpoint().get_d() == doctest::Approx(g3).epsilon(1e-12));

    for (const auto& row : r.rows) {
        CHECK(row.width == row.g_enclosure.width());
        CHECK(row.parity == (row.n % 2 == 0 ? "even" : "odd"));
        if (row.n >= 2) CHECK((row.n % 2 == 0) == (row.gap[0] != '-'));
    }
}

TEST_CASE("limit reached within 1e-6 by n = 40") {
    for (unsigned k = 1; k <= 3; ++k) {
        const ConvergenceReport r = converge_table(k, 40, default_width());
        CAPTURE(k);
        CHECK(r.passed());
        CHECK(r.failures.empty());
        const Interval& g = r.rows.back().g_enclosure;
        const Rational far = std::max(Rational(abs(g.hi - r.xi_enclosure.lo)), Rational(abs(r.xi_enclosure.hi - g.lo)));
        CHECK(far < Rational(1, 1000000));
        for (const auto& [n, ratio] : r.gap_ratios) CHECK(ratio < 1);
    }
}

TEST_CASE("tables are deterministic") {
    const ConvergenceReport a = converge_table(3, 20, default_width());
    const ConvergenceReport b = converge_table(3, 20, default_width());
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].g_enclosure.lo == b.rows[i].g_enclosure.lo);
        CHECK(a.rows[i].g_enclosure.hi == b.rows[i].g_enclosure.hi);
        CHECK(a.rows[i].gap == b.rows[i].gap);
    }
}

TEST_CASE("certified comparisons") {
    RootCertificate a = isolate_max_real_root(Polynomial{-2, 0, 1});
    RootCertificate b = isolate_max_real_root(Polynomial{-3, 0, 1});
    CHECK(certified_compare(a, b) == -1);
    CHECK(certified_compare(b, a) == 1);

    RootCertificate p = refine(isolate_max_real_root(Polynomial{-3, 2}), default_width());
    RootCertificate q = refine(isolate_max_real_root(Polynomial{-3, 2}), default_width());
    CHECK(certified_compare(p, q) == 0);

    // The same irrational root twice can never be separated.
    RootCertificate s1 = isolate_max_real_root(Polynomial{-2, 0, 1});
    RootCertificate s2 = isolate_max_real_root(Polynomial{-4, 0, 2});
    CHECK_THROWS_AS(certified_compare(s1, s2), InconclusiveComparison);
    CHECK(s1.enclosure.width() <= comparison_floor());
}

TEST_CASE("xi decreases toward 1") {
    const XiScanReport r = xi_scan(64, default_width());
    REQUIRE(r.entries.size() == 64);
    CHECK(r.strictly_decreasing);
    CHECK(r.all_above_one);
    CHECK(r.entries[0].enclosure.lo == Rational(3, 2));
    CHECK(r.last_minus_one > 0);
    CHECK(r.last_minus_one < Rational(1, 10));
    CHECK(r.entries[63].enclosure.hi < r.entries[62].enclosure.lo);
}

TEST_CASE("root equation probe") {
    const Eq1ProbeReport r = eq1_convergence_probe(1, 20, 128);
    CHECK(r.passed());
    REQUIRE(r.rows.size() == 19);
    for (std::size_t i = 2; i < r.rows.size(); ++i) CHECK(r.rows[i].log_abs_rhs < r.rows[i - 2].log_abs_rhs);

    const Eq1ProbeReport wide = eq1_convergence_probe(2, 30, 192);
    CHECK(wide.passed());
    CHECK(wide.rows.back().n == 30);
    CHECK(wide.rows.back().log_abs_rhs < wide.rows[wide.rows.size() - 3].log_abs_rhs);
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(converge_table(0, 10, default_width()), std::invalid_argument);
    CHECK_THROWS_AS(converge_table(1, 1, default_width()), std::invalid_argument);
    CHECK_THROWS_AS(xi_scan(1, default_width()), std::invalid_argument);
    CHECK_THROWS_AS(eq1_convergence_probe(1, 1, 128), std::invalid_argument);
}
