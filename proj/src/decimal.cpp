#include "fibroots/decimal.hpp"

#include <stdexcept>

namespace fibroots {

namespace {

Integer pow10(int digits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return p;
}

std::string render_scaled(const Integer& scaled, int digits) {
    std::string body = Integer(abs(scaled)).get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (scaled < 0 ? "-" : "") + body;
}

}  // namespace

std::string decimal_floor(const Rational& q, int digits) {
    Rational scaled_q = q * pow10(digits);
    Integer scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled_q.get_num_mpz_t(), scaled_q.get_den_mpz_t());
    return render_scaled(scaled, digits);
}

std::string decimal_ceil(const Rational& q, int digits) {
    Rational scaled_q = q * pow10(digits);
    Integer scaled;
    mpz_cdiv_q(scaled.get_mpz_t(), scaled_q.get_num_mpz_t(), scaled_q.get_den_mpz_t());
    return render_scaled(scaled, digits);
}

std::string exact_string(const Rational& q) {
    Integer den = q.get_den();
    int twos = static_cast<int>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(2).get_mpz_t()));
    int fives = static_cast<int>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(5).get_mpz_t()));
    if (den != 1) return q.get_str();
    const int digits = twos > fives ? twos : fives;
    return decimal_floor(q, digits);
}

int decimals_for(const Rational& bound) {
    if (bound <= 0) throw std::invalid_argument("decimals_for: bound must be positive");
    int d = 0;
    Rational step = 1;
    while (step > bound) {
        step /= 10;
        ++d;
    }
    return d;
}

std::string scientific(const Rational& q, int significant) {
    return PrecFloat(q, 128).to_scientific(significant);
}

Rational pow2_neg(unsigned bits) {
    Rational out = 1;
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
    return out;
}

}  // namespace fibroots
