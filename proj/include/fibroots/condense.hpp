#pragma once

// Determinant representation of G_n^(k) and Dodgson condensation.

#include "fibroots/arith.hpp"
#include "fibroots/report.hpp"

#include <stdexcept>
#include <vector>

namespace fibroots {

class NotTridiagonal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Condensation needed to divide by a zero interior entry.
class ZeroInteriorMinor : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Square matrix of polynomials, row-major.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Polynomial& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Polynomial& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    bool is_tridiagonal() const;

private:
    std::size_t dim_;
    std::vector<Polynomial> entries_;
};

/// n x n tridiagonal matrix with diagonal (x-1, x^k, ..., x^k), superdiagonal
/// all -1, and subdiagonal (-1, 1, ..., 1). Its determinant is G_n^(k).
PolyMatrix gee_matrix(unsigned k, unsigned n);

/// D_i = a_i D_{i-1} - b_i c_{i-1} D_{i-2}. Throws NotTridiagonal.
Polynomial tridiag_det(const PolyMatrix& m);

struct DodgsonResult {
    Polynomial det;
    /// Condensed entries whose block has a zero row or column and was set to
    /// zero without dividing.
    std::size_t structural_zeros = 0;
    /// Exact divisions performed.
    std::size_t divisions = 0;
};

/// Determinant by Dodgson condensation.
///
/// Each round replaces the matrix by its connected 2x2 minors, divided
/// exactly by the interior of the matrix two rounds back (Desnanot-Jacobi).
/// After round s the (i, j) entry equals the contiguous minor with top-left
/// corner (i, j) and size s + 1; when that block of the input has an all-zero
/// row or column the entry is zero and no division is attempted, which is
/// what makes banded matrices condensable.
///
/// Throws ZeroInteriorMinor when a required divisor is the zero polynomial,
/// and NotDivisible if an interior division is inexact (an implementation
/// fault, since Desnanot-Jacobi guarantees divisibility).
DodgsonResult dodgson_condense(const PolyMatrix& m);
Polynomial dodgson_det(const PolyMatrix& m);

/// G_n F_{n-2}(x^k) == G_{n-1} F_{n-1}(x^k) + (-1)^(n-1), for n >= 2.
CheckReport fact3_check(unsigned k, unsigned n);

/// F_{2n-3}(x^k) G_{2n} == F_{2n-1}(x^k) G_{2n-2} + x^k and
/// F_{2n-2}(x^k) G_{2n+1} == F_{2n}(x^k) G_{2n-1} - x^k, for n >= 2.
CheckReport fact4_check(unsigned k, unsigned n);

/// det(gee_matrix) == G_n by both the tridiagonal recurrence and Dodgson.
CheckReport determinant_check(unsigned k, unsigned n);

}  // namespace fibroots
