#include "fibroots/decimal.hpp"
#include "fibroots/families.hpp"
#include "fibroots/roots.hpp"

#include "support.hpp"

using namespace fibroots;

namespace {

const Polynomial cubic = Polynomial{-1, 1} * Polynomial{-2, 1} * Polynomial{-3, 1};

}  // namespace

TEST_CASE("Sturm counts on a cubic with integer roots") {
    const SturmSequence s(cubic);
    CHECK(s.count_total() == 3);
    CHECK(s.count_half_open(1, 3) == 2);
    CHECK(s.count(Interval{1, 3}) == 3);
    CHECK(s.count(RealRange{Rational(1), Rational(3)}) == 1);
    CHECK(s.count(RealRange::positive()) == 3);
    CHECK(s.count(RealRange::negative()) == 0);
    CHECK(s.count(Interval{Rational(3, 2), Rational(3, 2)}) == 0);
    CHECK(s.count(Interval{2, 2}) == 1);
}

TEST_CASE("repeated roots are counted once") {
    const Polynomial p = Polynomial{-1, 1} * Polynomial{-1, 1} * Polynomial{1, 1};
    CHECK(count_real_roots(p, RealRange::whole()) == 2);
    CHECK(count_real_roots(Polynomial{1, 0, 1}, RealRange::whole()) == 0);
}

TEST_CASE("Cauchy bound encloses every root") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = testing::random_poly(rng, 7, 30);
        if (p.degree() < 1) continue;
        const Rational b = cauchy_bound(p);
        CHECK(count_real_roots(p, RealRange{-b, b}) == count_real_roots(p, RealRange::whole()));
    }
}

TEST_CASE("sqrt 2 to 2^-80") {
    const RootCertificate c = refine(isolate_max_real_root(Polynomial{-2, 0, 1}), default_width());
    CHECK(c.enclosure.width() <= pow2_neg(80));
    CHECK(c.enclosure.lo * c.enclosure.lo < 2);
    CHECK(c.enclosure.hi * c.enclosure.hi > 2);
    // 30 decimals of sqrt 2, truncated.
    const Rational below("1414213562373095048801688724209/1000000000000000000000000000000");
    const Rational above = below + Rational(1, Integer("1000000000000000000000000000000"));
    CHECK(c.enclosure.hi > below);
    CHECK(c.enclosure.lo < above);
    CHECK(verify_certificate(c));
}

TEST_CASE("rational roots collapse to points") {
    const RootCertificate h1 = xi(1, default_width());
    CHECK(h1.exact());
    CHECK(h1.enclosure.lo == Rational(3, 2));
    for (unsigned k = 1; k <= 5; ++k) {
        const RootCertificate g1 = refine(isolate_max_real_root(gee(k, 1)), default_width());
        CHECK(g1.exact());
        CHECK(g1.enclosure.lo == 1);
    }
}

TEST_CASE("golden ratio as the maximal root of G_2") {
    const RootCertificate c = refine(isolate_max_real_root(gee(1, 2)), pow2_neg(100));
    const auto f = [](const Rational& v) { return Rational(v * v - v - 1); };
    CHECK(f(c.enclosure.lo) < 0);
    CHECK(f(c.enclosure.hi) > 0);
    CHECK(c.enclosure.width() <= pow2_neg(100));
}

TEST_CASE("maximal roots agree with a grid oracle") {
    for (unsigned k = 1; k <= 3; ++k) {
        for (unsigned n = 2; n <= 10; ++n) {
            const Polynomial p = gee(k, n);
            const double oracle = testing::grid_max_root(p, 0.0, 3.0);
            const RootCertificate c = refine(isolate_max_real_root(p), pow2_neg(60));
            CAPTURE(k);
            CAPTURE(n);
            CHECK(c.enclosure.midpoint().get_d() == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("refinement only shrinks") {
    RootCertificate c = isolate_max_real_root(gee(2, 7));
    Rational lo = c.enclosure.lo, hi = c.enclosure.hi;
    for (unsigned bits = 4; bits <= 64; bits += 12) {
        c = refine(c, pow2_neg(bits));
        CHECK(c.enclosure.lo >= lo);
        CHECK(c.enclosure.hi <= hi);
        lo = c.enclosure.lo;
        hi = c.enclosure.hi;
    }
}

TEST_CASE("certificates are rejected when tampered") {
    RootCertificate c = refine(isolate_max_real_root(Polynomial{-2, 0, 1}), pow2_neg(20));
    CHECK(verify_certificate(c));
    c.enclosure = {Rational(2), Rational(3)};
    CHECK_FALSE(verify_certificate(c));
}

TEST_CASE("no real root") {
    CHECK_THROWS_AS(isolate_max_real_root(Polynomial{1, 0, 1}), NoRealRoot);
    CHECK_THROWS_AS(isolate_max_real_root(Polynomial{1}), NoRealRoot);
    CHECK_THROWS_AS(isolate_max_real_root(fib(0)), NoRealRoot);
}

TEST_CASE("realness of all roots") {
    CHECK(all_real_roots_check(cubic));
    CHECK_FALSE(all_real_roots_check(Polynomial{1, 0, 1}));
    CHECK_FALSE(all_real_roots_check(fib(4)));
}

TEST_CASE("F_n vanishes at 2i cos(pi j/(n+1)) and has no positive roots") {
    const PrecFloat tol = PrecFloat::parse("1e-25", 128);
    for (unsigned n = 1; n <= 20; ++n) {
        const Fact1Report r = verify_fact1(n, tol);
        CAPTURE(n);
        CHECK(r.passed);
        CHECK(r.positive_roots == 0);
        CHECK(r.max_relative_residual < tol);
    }
}

TEST_CASE("root counts of H") {
    for (unsigned k = 1; k <= 8; ++k) {
        const RootCountReport r = aitch_root_counts(k);
        CAPTURE(k);
        CHECK(r.positive == 1);
        CHECK(r.negative == (k % 2 == 0 ? 1 : 0));
        CHECK(r.xi_above_one);
        CHECK(r.passed);
    }
}

TEST_CASE("xi of 3 lies in (1.3, 1.4)") {
    // H^(3)(1.3) < 0 < H^(3)(1.4), checked directly.
    CHECK(aitch(3).sign_at(Rational(13, 10)) < 0);
    CHECK(aitch(3).sign_at(Rational(14, 10)) > 0);
    const RootCertificate c = xi(3, default_width());
    CHECK(c.enclosure.lo > Rational(13, 10));
    CHECK(c.enclosure.hi < Rational(14, 10));
}
