#include "fibroots/arith.hpp"

#include <algorithm>
#include <sstream>

namespace fibroots {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Integer Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Integer Polynomial::content() const {
    Integer g = 0;
    for (const Integer& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    Integer g = content();
    if (g <= 1) return *this;
    Polynomial out(*this);
    for (Integer& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (Integer& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Integer& v : coeffs_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& v) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

Integer Polynomial::eval(const Integer& v) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

PrecFloat Polynomial::eval(const PrecFloat& v) const {
    PrecFloat acc(v.bits());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= v;
        acc += PrecFloat(*it, v.bits());
    }
    return acc;
}

ComplexFloat Polynomial::eval(const ComplexFloat& v) const {
    const mpfr_prec_t bits = v.bits();
    ComplexFloat acc(bits);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= v;
        acc.re += PrecFloat(*it, bits);
    }
    return acc;
}

int Polynomial::sign_at(const Rational& v) const {
    if (coeffs_.empty()) return 0;
    // den^deg * p(num/den); den > 0 so the sign is preserved.
    const Integer& num = v.get_num();
    const Integer& den = v.get_den();
    Integer acc = coeffs_.back();
    Integer den_pow = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), den_pow.get_mpz_t());
    }
    return sgn(acc);
}

std::string Polynomial::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

Polynomial shift_up(const Polynomial& p, std::size_t shift) {
    if (p.is_zero() || shift == 0) return p;
    std::vector<Integer> v(shift);
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial(std::move(v));
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Integer> v(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) v[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(v));
}

Polynomial substitute_power(const Polynomial& p, unsigned k) {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
    if (k == 1 || p.is_zero()) return p;
    std::vector<Integer> v(static_cast<std::size_t>(p.degree()) * k + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i * k] = p.coeffs()[i];
    return Polynomial(std::move(v));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("divide_exact: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NotDivisible("divide_exact: degree of divisor exceeds dividend");

    std::vector<Integer> rem = a.coeffs();
    const std::vector<Integer>& div = b.coeffs();
    const std::size_t db = div.size() - 1;
    std::vector<Integer> quot(rem.size() - db);
    Integer q, r;
    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top] == 0) continue;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[top].get_mpz_t(), div[db].get_mpz_t());
        if (r != 0) throw NotDivisible("divide_exact: leading coefficient does not divide");
        const std::size_t shift = top - db;
        quot[shift] = q;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[shift + j].get_mpz_t(), q.get_mpz_t(), div[j].get_mpz_t());
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (rem[i] != 0) throw NotDivisible("divide_exact: nonzero remainder");
    }
    return Polynomial(std::move(quot));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("pseudo_remainder: division by the zero polynomial");
    if (a.degree() < b.degree()) return a;

    std::vector<Integer> rem = a.coeffs();
    const std::vector<Integer>& div = b.coeffs();
    const std::size_t db = div.size() - 1;
    const Integer& lead = div[db];
    long steps_left = a.degree() - b.degree() + 1;
    Integer factor;
    for (std::size_t top = rem.size(); top-- > db;) {
        factor = rem[top];
        for (Integer& c : rem) c *= lead;
        --steps_left;
        if (factor == 0) continue;
        const std::size_t shift = top - db;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[shift + j].get_mpz_t(), factor.get_mpz_t(), div[j].get_mpz_t());
        }
    }
    rem.resize(db);
    Polynomial out(std::move(rem));
    if (steps_left > 0) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(steps_left));
        out *= scale;
    }
    return out;
}

namespace {

Polynomial positive_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial out = p.primitive_part();
    return out.leading() < 0 ? -out : out;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = positive_primitive(a);
    Polynomial v = positive_primitive(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = positive_primitive(pseudo_remainder(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() < 1) return positive_primitive(p);
    Polynomial g = gcd(p, derivative(p));
    Polynomial base = positive_primitive(p);
    if (g.degree() < 1) return base;
    return positive_primitive(divide_exact(base, g));
}

BiPolynomial::BiPolynomial(const Terms& terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

void BiPolynomial::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPolynomial BiPolynomial::constant(const Integer& c) { return term(c, 0, 0); }

BiPolynomial BiPolynomial::term(const Integer& c, unsigned x_exp, unsigned y_exp) {
    BiPolynomial out;
    out.add_term({x_exp, y_exp}, c);
    return out;
}

Integer BiPolynomial::coeff(unsigned x_exp, unsigned y_exp) const {
    auto it = terms_.find({x_exp, y_exp});
    return it == terms_.end() ? Integer(0) : it->second;
}

BiPolynomial BiPolynomial::operator-() const {
    BiPolynomial out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    BiPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        }
    }
    return out;
}

Integer BiPolynomial::eval(const Integer& x, const Integer& y) const {
    Integer acc = 0, px, py;
    for (const auto& [e, c] : terms_) {
        mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), e.first);
        mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), e.second);
        acc += c * px * py;
    }
    return acc;
}

Polynomial BiPolynomial::at_x(const Integer& x) const {
    std::vector<Integer> v;
    Integer px;
    for (const auto& [e, c] : terms_) {
        if (v.size() <= e.second) v.resize(e.second + 1);
        mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), e.first);
        mpz_addmul(v[e.second].get_mpz_t(), c.get_mpz_t(), px.get_mpz_t());
    }
    return Polynomial(std::move(v));
}

Polynomial BiPolynomial::at_y(const Integer& y) const {
    std::vector<Integer> v;
    Integer py;
    for (const auto& [e, c] : terms_) {
        if (v.size() <= e.first) v.resize(e.first + 1);
        mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), e.second);
        mpz_addmul(v[e.first].get_mpz_t(), c.get_mpz_t(), py.get_mpz_t());
    }
    return Polynomial(std::move(v));
}

BiPolynomial BiPolynomial::substitute_y_power(unsigned m) const {
    BiPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.first, e.second * m}, c);
    return out;
}

std::string BiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool bare = e.first == 0 && e.second == 0;
        if (mag != 1 || bare) os << mag;
        if (e.first >= 1) os << 'x';
        if (e.first >= 2) os << '^' << e.first;
        if (e.second >= 1) os << 'y';
        if (e.second >= 2) os << '^' << e.second;
    }
    return os.str();
}

BiPolynomial lift_x(const Polynomial& p) {
    BiPolynomial::Terms t;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] != 0) t.emplace(BiPolynomial::Exponents{static_cast<unsigned>(i), 0u}, p.coeffs()[i]);
    }
    return BiPolynomial(t);
}

BiPolynomial homogenize(const Polynomial& p, unsigned total) {
    if (p.degree() > static_cast<long>(total)) {
        throw std::invalid_argument("homogenize: total degree below polynomial degree");
    }
    BiPolynomial::Terms t;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] != 0) {
            t.emplace(BiPolynomial::Exponents{static_cast<unsigned>(i), total - static_cast<unsigned>(i)}, p.coeffs()[i]);
        }
    }
    return BiPolynomial(t);
}

}  // namespace fibroots
