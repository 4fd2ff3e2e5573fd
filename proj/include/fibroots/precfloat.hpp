#pragma once

// Binary floating point with an explicit mantissa width, backed by MPFR.
//
// Every PrecFloat carries its own precision. Binary operations produce a
// result at the larger of the two operand precisions, so precision only ever
// enters through a constructor argument.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace fibroots {

using Integer = mpz_class;
using Rational = mpq_class;

class PrecFloat {
public:
    static constexpr mpfr_prec_t kDefaultBits = 128;

    explicit PrecFloat(mpfr_prec_t bits = kDefaultBits);
    PrecFloat(long value, mpfr_prec_t bits);
    PrecFloat(const Integer& value, mpfr_prec_t bits);
    PrecFloat(const Rational& value, mpfr_prec_t bits);
    /// Parses a decimal literal such as "1.5" or "-2e-3"; throws std::invalid_argument.
    static PrecFloat parse(const std::string& text, mpfr_prec_t bits);
    static PrecFloat pi(mpfr_prec_t bits);

    PrecFloat(const PrecFloat& other);
    PrecFloat(PrecFloat&& other) noexcept;
    PrecFloat& operator=(const PrecFloat& other);
    PrecFloat& operator=(PrecFloat&& other) noexcept;
    ~PrecFloat();

    mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
    /// Same value rounded to a different precision.
    PrecFloat with_bits(mpfr_prec_t bits) const;

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Exact binary value as a rational. Requires a finite value.
    Rational to_rational() const;
    /// Scientific notation with `digits` significant digits, e.g. "1.2345e-07".
    std::string to_scientific(int digits) const;
    /// Fixed notation with `decimals` digits after the point.
    std::string to_fixed(int decimals) const;

    PrecFloat operator-() const;
    PrecFloat& operator+=(const PrecFloat& rhs);
    PrecFloat& operator-=(const PrecFloat& rhs);
    PrecFloat& operator*=(const PrecFloat& rhs);
    PrecFloat& operator/=(const PrecFloat& rhs);

    friend PrecFloat operator+(PrecFloat lhs, const PrecFloat& rhs) { return lhs += rhs; }
    friend PrecFloat operator-(PrecFloat lhs, const PrecFloat& rhs) { return lhs -= rhs; }
    friend PrecFloat operator*(PrecFloat lhs, const PrecFloat& rhs) { return lhs *= rhs; }
    friend PrecFloat operator/(PrecFloat lhs, const PrecFloat& rhs) { return lhs /= rhs; }

    friend bool operator==(const PrecFloat& a, const PrecFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const PrecFloat& a, const PrecFloat& b);

    friend PrecFloat abs(const PrecFloat& v);
    friend PrecFloat sqrt(const PrecFloat& v);
    friend PrecFloat log(const PrecFloat& v);
    friend PrecFloat cos(const PrecFloat& v);
    /// Integer power by repeated squaring (mpfr_pow_ui).
    friend PrecFloat pow(const PrecFloat& base, unsigned long exponent);
    /// v * 2^e, exact.
    friend PrecFloat ldexp(const PrecFloat& v, long e);

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

private:
    mpfr_t value_;
    void grow_to(mpfr_prec_t bits);
};

/// Complex value with PrecFloat components.
struct ComplexFloat {
    PrecFloat re;
    PrecFloat im;

    explicit ComplexFloat(mpfr_prec_t bits = PrecFloat::kDefaultBits) : re(bits), im(bits) {}
    ComplexFloat(PrecFloat real, PrecFloat imag) : re(std::move(real)), im(std::move(imag)) {}

    mpfr_prec_t bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }

    ComplexFloat& operator+=(const ComplexFloat& rhs);
    ComplexFloat& operator*=(const ComplexFloat& rhs);
    friend ComplexFloat operator+(ComplexFloat a, const ComplexFloat& b) { return a += b; }
    friend ComplexFloat operator*(ComplexFloat a, const ComplexFloat& b) { return a *= b; }
};

/// Modulus sqrt(re^2 + im^2).
PrecFloat abs(const ComplexFloat& z);

}  // namespace fibroots
