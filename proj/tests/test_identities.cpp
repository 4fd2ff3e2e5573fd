#include "fibroots/families.hpp"
#include "fibroots/identities.hpp"

#include "support.hpp"

using namespace fibroots;

TEST_CASE("affine relation") {
    for (unsigned n = 2; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(affine_check(n).passed);
    }
    CHECK_THROWS(affine_check(1));
}

TEST_CASE("coefficient split readings") {
    // n = 2: literal gives x^2 + y^2 = f_2(x, y); squared gives x^2 + y^4 = f_2(x, y^2).
    const BiPolynomial x2 = BiPolynomial::term(1, 2, 0);
    CHECK(fib_coeff_split(2, false) == x2 + BiPolynomial::term(1, 0, 2));
    CHECK(fib_coeff_split(2, true) == x2 + BiPolynomial::term(1, 0, 4));
    for (unsigned n = 2; n <= 30; ++n) {
        const SplitReport r = fib_coeff_split_check(n);
        CAPTURE(n);
        CHECK(r.squared_matches);
        CHECK_FALSE(r.literal_matches);
        CHECK(r.literal_matches_unsquared);
        CHECK(r.literal_first_mismatch.has_value());
        CHECK_FALSE(r.squared_first_mismatch.has_value());
    }
}

TEST_CASE("Jacobsthal-Lucas identity") {
    for (unsigned n = 2; n <= 30; ++n) {
        const JacobsthalReport r = jacobsthal_identity_check(n, 128);
        CAPTURE(n);
        CHECK(r.passed);
        CHECK(r.expected == jacobsthal_lucas(n));
    }
    const JacobsthalReport three = jacobsthal_identity_check(3, 128);
    CHECK(three.expected == 7);
    CHECK(three.swapped_argument == 12);
    CHECK_FALSE(three.swapped_matches);
    // n = 2: 2^(1/2) F_1(1/sqrt 2) + 2^2 F_0 = 1 + 4 = 5.
    CHECK(abs(jacobsthal_identity_value(2, 128) - PrecFloat(5, 128)) < ldexp(PrecFloat(1, 128), -120));
}

TEST_CASE("Lucas relation") {
    for (unsigned n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(lucas_relation_check(n).passed);
    }
}

TEST_CASE("index alignment of f_m(x, 1)") {
    CHECK(bfp2_fib_index_shift(25) == 0);
}
