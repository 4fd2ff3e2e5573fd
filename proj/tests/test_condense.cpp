#include "fibroots/condense.hpp"
#include "fibroots/families.hpp"

#include "support.hpp"

using namespace fibroots;

namespace {

// Laplace expansion along the first row.
Polynomial laplace(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1) return m.at(0, 0);
    Polynomial total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t cc = 0, out = 0; cc < n; ++cc) {
                if (cc != c) minor.at(r - 1, out++) = m.at(r, cc);
            }
        }
        const Polynomial term = m.at(0, c) * laplace(minor);
        total = c % 2 == 0 ? total + term : total - term;
    }
    return total;
}

PolyMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    PolyMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = Polynomial{rows[r][c]};
    }
    return m;
}

}  // namespace

TEST_CASE("G matrix layout") {
    const PolyMatrix m = gee_matrix(2, 4);
    CHECK(m.is_tridiagonal());
    CHECK(m.at(0, 0) == Polynomial{-1, 1});
    CHECK(m.at(1, 1) == Polynomial{0, 0, 1});
    CHECK(m.at(0, 1) == Polynomial{-1});
    CHECK(m.at(1, 0) == Polynomial{-1});
    CHECK(m.at(2, 1) == Polynomial{1});
    CHECK(m.at(0, 2).is_zero());
    CHECK_THROWS(gee_matrix(0, 3));
    CHECK_THROWS(PolyMatrix(0));
}

TEST_CASE("determinant routes agree with cofactor expansion") {
    for (unsigned k = 1; k <= 3; ++k) {
        for (unsigned n = 1; n <= 7; ++n) {
            const PolyMatrix m = gee_matrix(k, n);
            const Polynomial oracle = laplace(m);
            CAPTURE(k);
            CAPTURE(n);
            CHECK(oracle == gee(k, n));
            CHECK(tridiag_det(m) == oracle);
            CHECK(dodgson_det(m) == oracle);
        }
    }
}

TEST_CASE("Dodgson on a dense matrix") {
    const PolyMatrix m = from_ints({{2, 1, 3, 1}, {1, 4, 1, 2}, {3, 1, 5, 1}, {1, 2, 1, 6}});
    const DodgsonResult d = dodgson_condense(m);
    CHECK(d.det == laplace(m));
    CHECK(d.structural_zeros == 0);
    CHECK(d.divisions == 4 + 1);
    CHECK_THROWS_AS(tridiag_det(m), NotTridiagonal);
}

TEST_CASE("banded matrices skip structurally zero blocks") {
    const DodgsonResult d = dodgson_condense(gee_matrix(2, 8));
    CHECK(d.det == gee(2, 8));
    CHECK(d.structural_zeros > 0);
}

TEST_CASE("zero interior entry is reported") {
    const PolyMatrix m = from_ints({{1, 1, 1}, {1, 0, 1}, {1, 1, 2}});
    CHECK_THROWS_AS(dodgson_condense(m), ZeroInteriorMinor);
    CHECK(laplace(m) == Polynomial{-1});
}

TEST_CASE("identity checks") {
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned n = 2; n <= 30; ++n) {
            CHECK(fact3_check(k, n).passed);
            CHECK(fact4_check(k, n).passed);
        }
        for (unsigned n = 1; n <= 12; ++n) {
            const CheckReport r = determinant_check(k, n);
            CHECK(r.passed);
            CHECK(r.notes.empty());
        }
    }
    CHECK_THROWS(fact3_check(1, 1));
}
