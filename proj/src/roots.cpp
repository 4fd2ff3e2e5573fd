#include "fibroots/roots.hpp"

#include "fibroots/decimal.hpp"
#include "fibroots/families.hpp"

namespace fibroots {

namespace {

Polynomial positive_content_part(const Polynomial& p) {
    Integer g = p.content();
    if (g <= 1) return p;
    std::vector<Integer> v = p.coeffs();
    for (Integer& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return Polynomial(std::move(v));
}

// Remainder of a by b up to a positive factor, negated.
Polynomial negated_remainder(const Polynomial& a, const Polynomial& b) {
    Polynomial r = pseudo_remainder(a, b);
    const long steps = a.degree() - b.degree() + 1;
    const bool flipped = b.leading() < 0 && steps % 2 != 0;
    return positive_content_part(flipped ? r : -r);
}

int count_variations(const std::vector<int>& signs) {
    int variations = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    std::vector<Polynomial> chain{positive_content_part(p)};
    Polynomial d = derivative(p);
    if (d.is_zero()) return chain;
    chain.push_back(positive_content_part(d));
    while (chain.back().degree() > 0) {
        Polynomial r = negated_remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

SturmSequence::SturmSequence(const Polynomial& p) : chain_(sturm_chain(p)) {
    // The last member is gcd(p, p') up to a constant.
    if (chain_.back().degree() > 0) chain_ = sturm_chain(square_free_part(p));
}

int SturmSequence::variations_at(const Rational& v) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const Polynomial& q : chain_) signs.push_back(q.sign_at(v));
    return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const Polynomial& q : chain_) signs.push_back(sgn(q.leading()));
    return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const Polynomial& q : chain_) {
        int s = sgn(q.leading());
        signs.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return count_variations(signs);
}

int SturmSequence::count_half_open(const Rational& lo, const Rational& hi) const {
    if (hi <= lo) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count(const RealRange& range) const {
    const int v_lo = range.lo ? variations_at(*range.lo) : variations_at_neg_inf();
    const int v_hi = range.hi ? variations_at(*range.hi) : variations_at_pos_inf();
    if (range.lo && range.hi && *range.hi <= *range.lo) return 0;
    // (lo, hi] minus a root sitting exactly on hi.
    const int on_hi = range.hi && base().sign_at(*range.hi) == 0 ? 1 : 0;
    return v_lo - v_hi - on_hi;
}

int SturmSequence::count(const Interval& closed) const {
    if (closed.hi < closed.lo) return 0;
    const int on_lo = base().sign_at(closed.lo) == 0 ? 1 : 0;
    return variations_at(closed.lo) - variations_at(closed.hi) + on_lo;
}

int count_real_roots(const Polynomial& p, const RealRange& range) { return SturmSequence(p).count(range); }

int count_real_roots(const Polynomial& p, const Interval& closed) { return SturmSequence(p).count(closed); }

Rational cauchy_bound(const Polynomial& p) {
    if (p.degree() < 1) return 1;
    Integer biggest = 0;
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        if (abs(p.coeffs()[i]) > biggest) biggest = abs(p.coeffs()[i]);
    }
    Rational b(biggest, abs(p.leading()));
    b.canonicalize();
    return b + 1;
}

Rational default_width() { return pow2_neg(80); }

namespace {

RootCertificate make_certificate(const Polynomial& p, const Polynomial& sqf, Rational lo, Rational hi) {
    RootCertificate cert;
    cert.poly = p;
    cert.squarefree = sqf;
    cert.enclosure = {std::move(lo), std::move(hi)};
    cert.sturm_count = 1;
    cert.sign_lo = p.sign_at(cert.enclosure.lo);
    cert.sign_hi = p.sign_at(cert.enclosure.hi);
    return cert;
}

// Every rational root of sqf is a multiple of 1/|lc|. Once the enclosure is
// narrower than that spacing it holds at most one candidate above lo.
std::optional<Rational> rational_root_in(const Polynomial& sqf, const Interval& iv) {
    const Integer lead = abs(sqf.leading());
    if (iv.width() * lead >= 1) return std::nullopt;
    Rational scaled = iv.lo * lead;
    Integer floor_val;
    mpz_fdiv_q(floor_val.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational candidate(floor_val + 1, lead);
    candidate.canonicalize();
    if (candidate <= iv.hi && sqf.sign_at(candidate) == 0) return candidate;
    return std::nullopt;
}

}  // namespace

RootCertificate isolate_max_real_root(const Polynomial& p) {
    if (p.is_zero()) throw NoRealRoot("zero polynomial has no isolated root");
    SturmSequence sturm(p);
    const Polynomial& sqf = sturm.base();
    if (sturm.count_total() == 0) throw NoRealRoot("polynomial " + p.to_string() + " has no real root");

    const Rational bound = cauchy_bound(sqf);
    Rational lo = -bound, hi = bound;
    int v_lo = sturm.variations_at(lo);
    int v_hi = sturm.variations_at(hi);
    while (v_lo - v_hi > 1) {
        Rational mid = (lo + hi) / 2;
        const int v_mid = sturm.variations_at(mid);
        if (v_mid - v_hi >= 1) {
            lo = std::move(mid);
            v_lo = v_mid;
        } else {
            hi = std::move(mid);
            v_hi = v_mid;
        }
    }
    if (sqf.sign_at(hi) == 0) return make_certificate(p, sqf, hi, hi);
    if (auto r = rational_root_in(sqf, {lo, hi})) return make_certificate(p, sqf, *r, *r);
    return make_certificate(p, sqf, std::move(lo), std::move(hi));
}

RootCertificate refine(const RootCertificate& cert, const Rational& width) {
    if (cert.exact() || cert.enclosure.width() <= width) return cert;
    const Polynomial& sqf = cert.squarefree;
    Rational lo = cert.enclosure.lo, hi = cert.enclosure.hi;
    const int sign_hi = sqf.sign_at(hi);
    bool snap_checked = false;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        const int s = sqf.sign_at(mid);
        if (s == 0) return make_certificate(cert.poly, sqf, mid, mid);
        if (s == sign_hi) {
            hi = std::move(mid);
        } else {
            lo = std::move(mid);
        }
        if (!snap_checked && (hi - lo) * abs(sqf.leading()) < 1) {
            snap_checked = true;
            if (auto r = rational_root_in(sqf, {lo, hi})) return make_certificate(cert.poly, sqf, *r, *r);
        }
    }
    return make_certificate(cert.poly, sqf, std::move(lo), std::move(hi));
}

bool verify_certificate(const RootCertificate& cert) {
    if (cert.enclosure.hi < cert.enclosure.lo) return false;
    SturmSequence sturm(cert.poly);
    if (sturm.count(cert.enclosure) != 1) return false;
    if (cert.exact()) return cert.poly.sign_at(cert.enclosure.lo) == 0;
    return cert.sign_lo == cert.poly.sign_at(cert.enclosure.lo) && cert.sign_hi == cert.poly.sign_at(cert.enclosure.hi);
}

RootCertificate xi(unsigned k, const Rational& width) {
    Polynomial h = aitch(k);
    RootCertificate cert = refine(isolate_max_real_root(h), width);
    // H(1) = -1 for every k, so the positive root is never exactly 1.
    Rational floor_width = pow2_neg(200);
    while (cert.enclosure.lo <= 1 && cert.enclosure.width() > floor_width) {
        cert = refine(cert, cert.enclosure.width() / 2);
    }
    if (cert.enclosure.lo <= 1) throw std::logic_error("xi: enclosure did not separate from 1");
    return cert;
}

Fact1Report verify_fact1(unsigned n, const PrecFloat& tol) {
    if (n == 0) throw std::invalid_argument("verify_fact1 requires n >= 1");
    const mpfr_prec_t bits = tol.bits();
    Polynomial f = fib(n);
    Integer biggest = 0;
    for (const Integer& c : f.coeffs()) {
        if (abs(c) > biggest) biggest = abs(c);
    }
    const PrecFloat scale(Integer(biggest + 1), bits);
    const PrecFloat pi = PrecFloat::pi(bits);

    Fact1Report report;
    report.n = n;
    report.max_relative_residual = PrecFloat(bits);
    for (unsigned j = 1; j <= n; ++j) {
        PrecFloat angle = pi * PrecFloat(static_cast<long>(j), bits) / PrecFloat(static_cast<long>(n + 1), bits);
        ComplexFloat z(PrecFloat(bits), ldexp(cos(angle), 1));
        PrecFloat rel = abs(f.eval(z)) / scale;
        if (rel > report.max_relative_residual) report.max_relative_residual = rel;
    }
    report.positive_roots = count_real_roots(f, RealRange::positive());
    report.passed = report.max_relative_residual < tol && report.positive_roots == 0;
    return report;
}

bool all_real_roots_check(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("all_real_roots_check: zero polynomial");
    SturmSequence sturm(p);
    return sturm.count_total() == sturm.base().degree();
}

RootCountReport aitch_root_counts(unsigned k) {
    Polynomial h = aitch(k);
    SturmSequence sturm(h);
    RootCountReport report;
    report.k = k;
    report.positive = sturm.count(RealRange::positive());
    report.negative = sturm.count(RealRange::negative());
    // No roots in (0, 1] means the positive one lies above 1.
    report.xi_above_one = report.positive >= 1 && sturm.count(Interval{Rational(0), Rational(1)}) == 0;
    report.passed = report.positive == 1 && report.xi_above_one && report.negative == (k % 2 == 0 ? 1 : 0);
    return report;
}

}  // namespace fibroots
