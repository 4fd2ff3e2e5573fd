#pragma once

// Exact polynomial arithmetic over arbitrary-precision integers.
//
// Polynomial is dense and univariate; BiPolynomial is a sparse map from
// exponent pairs to coefficients. Both are immutable value types in normal
// form: Polynomial never stores a zero leading coefficient, BiPolynomial
// never stores a zero entry.

#include "fibroots/precfloat.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibroots {

/// Raised by divide_exact when the remainder is nonzero.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZeroPoly : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Polynomial {
public:
    Polynomial() = default;
    /// coeffs[i] is the coefficient of x^i; trailing zeros are dropped.
    explicit Polynomial(std::vector<Integer> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Integer& c);
    static Polynomial monomial(const Integer& c, std::size_t degree);
    static Polynomial x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    Integer coeff(std::size_t i) const;
    /// Requires a nonzero polynomial.
    const Integer& leading() const;

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    /// this / content(), keeping the sign of the leading coefficient.
    Polynomial primitive_part() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Integer& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
    friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Horner evaluation. Exact for rationals; floats evaluate at the argument's precision.
    Rational eval(const Rational& v) const;
    Integer eval(const Integer& v) const;
    PrecFloat eval(const PrecFloat& v) const;
    ComplexFloat eval(const ComplexFloat& v) const;

    /// Sign of p(v) computed with integers only (homogenized Horner).
    int sign_at(const Rational& v) const;

    /// Human-readable form, e.g. "x^2 - x - 1".
    std::string to_string(char var = 'x') const;

private:
    std::vector<Integer> coeffs_;
    void normalize();
};

/// p * x^shift.
Polynomial shift_up(const Polynomial& p, std::size_t shift);

Polynomial derivative(const Polynomial& p);

/// p(x^k). Throws std::invalid_argument for k = 0.
Polynomial substitute_power(const Polynomial& p, unsigned k);

/// Quotient q with a = q * b over the integers.
/// Throws DivisionByZeroPoly for b = 0 and NotDivisible if no such q exists.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b. Requires b nonzero.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
Polynomial square_free_part(const Polynomial& p);

/// Sparse bivariate polynomial in x and y; key (i, j) stands for x^i y^j.
class BiPolynomial {
public:
    using Exponents = std::pair<unsigned, unsigned>;
    using Terms = std::map<Exponents, Integer>;

    BiPolynomial() = default;
    explicit BiPolynomial(const Terms& terms);

    static BiPolynomial constant(const Integer& c);
    static BiPolynomial term(const Integer& c, unsigned x_exp, unsigned y_exp);
    static BiPolynomial x() { return term(1, 1, 0); }
    static BiPolynomial y() { return term(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Integer coeff(unsigned x_exp, unsigned y_exp) const;

    BiPolynomial operator-() const;
    BiPolynomial& operator+=(const BiPolynomial& rhs);
    BiPolynomial& operator-=(const BiPolynomial& rhs);
    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
    friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

    Integer eval(const Integer& x, const Integer& y) const;
    /// Polynomial in y obtained by fixing x.
    Polynomial at_x(const Integer& x) const;
    /// Polynomial in x obtained by fixing y.
    Polynomial at_y(const Integer& y) const;
    /// y -> y^m.
    BiPolynomial substitute_y_power(unsigned m) const;

    std::string to_string() const;

private:
    Terms terms_;
    void add_term(const Exponents& e, const Integer& c);
};

/// Embeds a univariate polynomial in x.
BiPolynomial lift_x(const Polynomial& p);

/// y^total * p(x / y) as a bivariate polynomial; requires total >= deg p.
BiPolynomial homogenize(const Polynomial& p, unsigned total);

}  // namespace fibroots
