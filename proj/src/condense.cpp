#include "fibroots/condense.hpp"

#include "fibroots/families.hpp"

#include <string>

namespace fibroots {

PolyMatrix::PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("PolyMatrix: dimension must be at least 1");
}

bool PolyMatrix::is_tridiagonal() const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const std::size_t gap = r > c ? r - c : c - r;
            if (gap > 1 && !at(r, c).is_zero()) return false;
        }
    }
    return true;
}

PolyMatrix gee_matrix(unsigned k, unsigned n) {
    if (k == 0) throw std::invalid_argument("gee_matrix: k must be positive");
    if (n == 0) throw std::invalid_argument("gee_matrix: n must be at least 1");
    PolyMatrix m(n);
    const Polynomial xk = Polynomial::monomial(1, k);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = i == 0 ? Polynomial{-1, 1} : xk;
        if (i + 1 < n) {
            m.at(i, i + 1) = Polynomial{-1};
            m.at(i + 1, i) = i == 0 ? Polynomial{-1} : Polynomial{1};
        }
    }
    return m;
}

Polynomial tridiag_det(const PolyMatrix& m) {
    if (!m.is_tridiagonal()) throw NotTridiagonal("tridiag_det: matrix has entries off the three central bands");
    Polynomial before{1};
    Polynomial current = m.at(0, 0);
    for (std::size_t i = 1; i < m.dim(); ++i) {
        Polynomial next = m.at(i, i) * current - (m.at(i, i - 1) * m.at(i - 1, i)) * before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

namespace {

class ZeroPattern {
public:
    explicit ZeroPattern(const PolyMatrix& m) : dim_(m.dim()), zero_(m.dim() * m.dim()) {
        for (std::size_t r = 0; r < dim_; ++r) {
            for (std::size_t c = 0; c < dim_; ++c) zero_[r * dim_ + c] = m.at(r, c).is_zero();
        }
    }

    // Block with top-left (row, col) and the given size has a zero row or column.
    bool block_degenerate(std::size_t row, std::size_t col, std::size_t size) const {
        for (std::size_t r = row; r < row + size; ++r) {
            bool all_zero = true;
            for (std::size_t c = col; c < col + size && all_zero; ++c) all_zero = zero_[r * dim_ + c];
            if (all_zero) return true;
        }
        for (std::size_t c = col; c < col + size; ++c) {
            bool all_zero = true;
            for (std::size_t r = row; r < row + size && all_zero; ++r) all_zero = zero_[r * dim_ + c];
            if (all_zero) return true;
        }
        return false;
    }

private:
    std::size_t dim_;
    std::vector<bool> zero_;
};

using Grid = std::vector<std::vector<Polynomial>>;

}  // namespace

DodgsonResult dodgson_condense(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    DodgsonResult result;
    Grid current(n, std::vector<Polynomial>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) current[r][c] = m.at(r, c);
    }
    if (n == 1) {
        result.det = current[0][0];
        return result;
    }

    const ZeroPattern pattern(m);
    Grid interior;  // the grid two rounds back; empty before round 2
    for (std::size_t round = 1; round < n; ++round) {
        const std::size_t size = n - round;
        Grid next(size, std::vector<Polynomial>(size));
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (pattern.block_degenerate(i, j, round + 1)) {
                    ++result.structural_zeros;
                    continue;
                }
                Polynomial minor = current[i][j] * current[i + 1][j + 1] - current[i][j + 1] * current[i + 1][j];
                if (round >= 2) {
                    const Polynomial& divisor = interior[i + 1][j + 1];
                    if (divisor.is_zero()) {
                        throw ZeroInteriorMinor("dodgson_det: zero interior entry at round " + std::to_string(round) +
                                                ", position (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    }
                    minor = divide_exact(minor, divisor);
                    ++result.divisions;
                }
                next[i][j] = std::move(minor);
            }
        }
        interior = std::move(current);
        current = std::move(next);
    }
    result.det = current[0][0];
    return result;
}

Polynomial dodgson_det(const PolyMatrix& m) { return dodgson_condense(m).det; }

namespace {

std::string tag(const char* what, unsigned k, unsigned n) {
    return std::string(what) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

}  // namespace

CheckReport fact3_check(unsigned k, unsigned n) {
    if (n < 2) throw std::invalid_argument("fact3_check requires n >= 2");
    CheckReport report{tag("fact3", k, n)};
    const Polynomial lhs = gee(k, n) * substitute_power(fib(n - 2), k);
    const Polynomial sign{n % 2 == 0 ? -1 : 1};
    const Polynomial rhs = gee(k, n - 1) * substitute_power(fib(n - 1), k) + sign;
    if (lhs != rhs) report.fail("lhs - rhs = " + (lhs - rhs).to_string());
    report.detail = "cleared quotient identity, degree " + std::to_string(lhs.degree());
    return report;
}

CheckReport fact4_check(unsigned k, unsigned n) {
    if (n < 2) throw std::invalid_argument("fact4_check requires n >= 2");
    CheckReport report{tag("fact4", k, n)};
    auto f = [k](unsigned m) { return substitute_power(fib(m), k); };
    const Polynomial xk = Polynomial::monomial(1, k);

    const Polynomial even_lhs = f(2 * n - 3) * gee(k, 2 * n);
    const Polynomial even_rhs = f(2 * n - 1) * gee(k, 2 * n - 2) + xk;
    if (even_lhs != even_rhs) report.fail("even-index identity, difference " + (even_lhs - even_rhs).to_string());

    const Polynomial odd_lhs = f(2 * n - 2) * gee(k, 2 * n + 1);
    const Polynomial odd_rhs = f(2 * n) * gee(k, 2 * n - 1) - xk;
    if (odd_lhs != odd_rhs) report.fail("odd-index identity, difference " + (odd_lhs - odd_rhs).to_string());

    report.detail = "both interleaving identities";
    return report;
}

CheckReport determinant_check(unsigned k, unsigned n) {
    CheckReport report{tag("det", k, n)};
    const PolyMatrix m = gee_matrix(k, n);
    const Polynomial expected = gee(k, n);
    if (tridiag_det(m) != expected) report.fail("tridiagonal recurrence disagrees with G_n");
    try {
        DodgsonResult d = dodgson_condense(m);
        if (d.det != expected) report.fail("Dodgson condensation disagrees with G_n");
        report.detail = "Dodgson: " + std::to_string(d.divisions) + " exact divisions, " +
                        std::to_string(d.structural_zeros) + " structural zeros";
    } catch (const ZeroInteriorMinor& e) {
        report.notes.push_back(std::string("fell back to tridiagonal recurrence: ") + e.what());
    }
    return report;
}

}  // namespace fibroots
