#include "fibroots/families.hpp"

#include "support.hpp"

#include <future>

using namespace fibroots;

namespace {

// Coefficient vectors by the recurrence, in plain integers.
std::vector<long long> add(std::vector<long long> a, const std::vector<long long>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<long long> shift(const std::vector<long long>& a, std::size_t s) {
    std::vector<long long> out(s, 0);
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

std::vector<long long> gee_oracle(unsigned k, unsigned n) {
    std::vector<long long> prev{-1}, cur{-1, 1};
    if (n == 0) return prev;
    for (unsigned m = 2; m <= n; ++m) {
        auto next = add(shift(cur, k), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool same(const Polynomial& p, const std::vector<long long>& oracle) {
    std::size_t top = oracle.size();
    while (top > 0 && oracle[top - 1] == 0) --top;
    if (p.coeffs().size() != top) return false;
    for (std::size_t i = 0; i < top; ++i) {
        if (p.coeffs()[i] != Integer(std::to_string(oracle[i]))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("first members") {
    CHECK(fib(0) == Polynomial{1});
    CHECK(fib(2) == Polynomial{1, 0, 1});
    CHECK(fib(3) == Polynomial{0, 2, 0, 1});
    CHECK(gee(1, 0) == Polynomial{-1});
    CHECK(gee(1, 2) == Polynomial{-1, -1, 1});
    CHECK(aitch(1) == Polynomial{-3, 2});
    CHECK(aitch(2) == Polynomial{-2, 0, 1});
    CHECK(aitch(3) == Polynomial{-2, 1, -1, 1});
    CHECK(hseq(2) == Polynomial{1, 2});
    CHECK(lucas(2) == Polynomial{2, 0, 1});
    CHECK_THROWS_AS(gee(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(aitch(0), std::invalid_argument);
}

TEST_CASE("G matches an independent recurrence") {
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned n = 0; n <= 30; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(same(gee(k, n), gee_oracle(k, n)));
            CHECK(gee(k, n).eval(Integer(0)) == -1);
        }
    }
}

TEST_CASE("binomial form of F") {
    for (unsigned n = 0; n <= 40; ++n) CHECK(fib_explicit(n) == fib(n));
}

TEST_CASE("bivariate families") {
    const BiPolynomial x = BiPolynomial::x(), y = BiPolynomial::y();
    CHECK(bfp1(0) == x);
    CHECK(bfp1(1) == y);
    CHECK(bfp1(3) == BiPolynomial::term(2, 2, 1) + BiPolynomial::term(1, 0, 2));
    CHECK(bfp2(0) == y);
    CHECK(bfp2(1) == x);

    // Integer recurrence at sample points.
    for (long a : {-2L, 1L, 3L}) {
        for (long b : {-1L, 2L, 5L}) {
            Integer g0 = a, g1 = b, f0 = b, f1 = a;
            for (unsigned n = 2; n <= 20; ++n) {
                Integer g2 = a * g1 + b * g0, f2 = a * f1 + b * f0;
                CHECK(bfp1(n).eval(a, b) == g2);
                CHECK(bfp2(n).eval(a, b) == f2);
                g0 = g1, g1 = g2, f0 = f1, f1 = f2;
            }
        }
    }
}

TEST_CASE("closed forms of the bivariate families") {
    for (unsigned n = 1; n <= 30; ++n) CHECK(bfp1_explicit(n) == bfp1(n));
    CHECK_THROWS(bfp1_explicit(0));
    for (unsigned n = 2; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(f1y_explicit(n) == bfp2(n).at_x(1));
    }
    CHECK(f1y_explicit(2) == Polynomial{1, 0, 1});
    CHECK_THROWS(f1y_explicit(1));
}

TEST_CASE("Jacobsthal-Lucas numbers") {
    const long head[] = {2, 1, 5, 7, 17, 31};
    for (unsigned n = 0; n < 6; ++n) CHECK(jacobsthal_lucas(n) == head[n]);
    Integer a = 2, b = 1;
    for (unsigned n = 2; n <= 40; ++n) {
        Integer c = b + 2 * a;
        CHECK(jacobsthal_lucas(n) == c);
        a = b, b = c;
    }
}

TEST_CASE("combinatorial helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("family names") {
    for (Family f : {Family::F, Family::G, Family::H, Family::BFP1, Family::BFP2, Family::HSEQ, Family::LUCAS}) {
        CHECK(parse_family(family_name(f)) == f);
    }
    CHECK_FALSE(parse_family("Q").has_value());
    CHECK(is_bivariate(Family::BFP2));
    CHECK_FALSE(is_bivariate(Family::G));
    CHECK(univariate_member({Family::H, 2}, 99) == aitch(2));
    CHECK_THROWS(univariate_member({Family::BFP1, 1}, 2));
}

TEST_CASE("cached members are identical across threads") {
    std::vector<std::future<Polynomial>> jobs;
    for (int t = 0; t < 8; ++t) jobs.push_back(std::async(std::launch::async, [] { return gee(3, 60); }));
    const Polynomial first = jobs.front().get();
    for (std::size_t t = 1; t < jobs.size(); ++t) CHECK(jobs[t].get() == first);
    CHECK(same(first, gee_oracle(3, 60)));
}
