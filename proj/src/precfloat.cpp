#include "fibroots/precfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fibroots {

PrecFloat::PrecFloat(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

PrecFloat::PrecFloat(long value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

PrecFloat::PrecFloat(const Integer& value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

PrecFloat::PrecFloat(const Rational& value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

PrecFloat PrecFloat::parse(const std::string& text, mpfr_prec_t bits) {
    PrecFloat out(bits);
    char* end = nullptr;
    if (!text.empty()) mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
    if (text.empty() || *end != '\0') {
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
    return out;
}

PrecFloat PrecFloat::pi(mpfr_prec_t bits) {
    PrecFloat out(bits);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

PrecFloat::PrecFloat(const PrecFloat& other) {
    mpfr_init2(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

PrecFloat::PrecFloat(PrecFloat&& other) noexcept {
    mpfr_init2(value_, other.bits());
    mpfr_swap(value_, other.value_);
}

PrecFloat& PrecFloat::operator=(const PrecFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.bits());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

PrecFloat& PrecFloat::operator=(PrecFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

PrecFloat::~PrecFloat() { mpfr_clear(value_); }

PrecFloat PrecFloat::with_bits(mpfr_prec_t bits) const {
    PrecFloat out(bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

Rational PrecFloat::to_rational() const {
    if (!is_finite()) throw std::domain_error("non-finite value has no rational form");
    Integer mant;
    mpfr_exp_t exp = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
    Rational out(mant);
    if (exp >= 0) {
        mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
    } else {
        mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
    }
    return out;
}

std::string PrecFloat::to_scientific(int digits) const {
    int len = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return std::string(buf.data());
}

std::string PrecFloat::to_fixed(int decimals) const {
    int len = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, value_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
    return std::string(buf.data());
}

void PrecFloat::grow_to(mpfr_prec_t bits) {
    if (bits > this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

PrecFloat PrecFloat::operator-() const {
    PrecFloat out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

PrecFloat& PrecFloat::operator+=(const PrecFloat& rhs) {
    grow_to(rhs.bits());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

PrecFloat& PrecFloat::operator-=(const PrecFloat& rhs) {
    grow_to(rhs.bits());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

PrecFloat& PrecFloat::operator*=(const PrecFloat& rhs) {
    grow_to(rhs.bits());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

PrecFloat& PrecFloat::operator/=(const PrecFloat& rhs) {
    grow_to(rhs.bits());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const PrecFloat& a, const PrecFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

PrecFloat abs(const PrecFloat& v) {
    PrecFloat out(v.bits());
    mpfr_abs(out.value_, v.value_, MPFR_RNDN);
    return out;
}

PrecFloat sqrt(const PrecFloat& v) {
    PrecFloat out(v.bits());
    mpfr_sqrt(out.value_, v.value_, MPFR_RNDN);
    return out;
}

PrecFloat log(const PrecFloat& v) {
    PrecFloat out(v.bits());
    mpfr_log(out.value_, v.value_, MPFR_RNDN);
    return out;
}

PrecFloat cos(const PrecFloat& v) {
    PrecFloat out(v.bits());
    mpfr_cos(out.value_, v.value_, MPFR_RNDN);
    return out;
}

PrecFloat pow(const PrecFloat& base, unsigned long exponent) {
    PrecFloat out(base.bits());
    mpfr_pow_ui(out.value_, base.value_, exponent, MPFR_RNDN);
    return out;
}

PrecFloat ldexp(const PrecFloat& v, long e) {
    PrecFloat out(v.bits());
    mpfr_mul_2si(out.value_, v.value_, e, MPFR_RNDN);
    return out;
}

ComplexFloat& ComplexFloat::operator+=(const ComplexFloat& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

ComplexFloat& ComplexFloat::operator*=(const ComplexFloat& rhs) {
    PrecFloat r = re * rhs.re - im * rhs.im;
    PrecFloat i = re * rhs.im + im * rhs.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

PrecFloat abs(const ComplexFloat& z) {
    PrecFloat out(z.bits());
    mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return out;
}

}  // namespace fibroots
