#pragma once

// Certified real-root counting and isolation over exact rationals.
//
// Counting uses Sturm sequences built from primitive pseudo-remainders, so
// every sign decision is an exact integer computation. A RootCertificate
// pins one real root inside a rational interval; refining it only ever
// shrinks the interval, so successive enclosures are nested.

#include "fibroots/arith.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fibroots {

class NoRealRoot : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

/// Open range (lo, hi); an absent bound is infinite.
struct RealRange {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    static RealRange whole() { return {}; }
    static RealRange positive() { return {Rational(0), std::nullopt}; }
    static RealRange negative() { return {std::nullopt, Rational(0)}; }
};

/// Sign-variation counter for one polynomial.
///
/// The chain is p, p', -prem(p, p'), ... with each member divided by its
/// positive content. When p has repeated roots the sequence is rebuilt on the
/// square-free part, so counts are always of distinct roots.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    const std::vector<Polynomial>& chain() const { return chain_; }
    /// The square-free polynomial the chain was built on.
    const Polynomial& base() const { return chain_.front(); }

    int variations_at(const Rational& v) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;

    /// Distinct roots in the half-open interval (lo, hi].
    int count_half_open(const Rational& lo, const Rational& hi) const;
    int count(const RealRange& range) const;
    int count(const Interval& closed) const;
    int count_total() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<Polynomial> chain_;
};

/// Raw chain p, p', negated remainders (content-normalized), for p nonzero.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Distinct real roots in an open range or a closed interval.
int count_real_roots(const Polynomial& p, const RealRange& range);
int count_real_roots(const Polynomial& p, const Interval& closed);

/// 1 + max|a_i| / |a_n|; every root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

struct RootCertificate {
    Polynomial poly;
    Polynomial squarefree;
    Interval enclosure;
    int sturm_count = 1;  // distinct roots of poly in the closed enclosure
    int sign_lo = 0;      // sign of poly at enclosure.lo
    int sign_hi = 0;

    bool exact() const { return enclosure.is_point(); }
};

/// Certificate for the largest real root; throws NoRealRoot.
RootCertificate isolate_max_real_root(const Polynomial& p);

/// Bisects until width <= `width`; an exact rational root collapses the
/// enclosure to a point.
RootCertificate refine(const RootCertificate& cert, const Rational& width);

/// Re-checks the certificate from scratch with a fresh Sturm sequence.
bool verify_certificate(const RootCertificate& cert);

/// Default certified width, 2^-80.
Rational default_width();

/// The unique positive root of H^(k), as a certificate with enclosure in (1, inf).
RootCertificate xi(unsigned k, const Rational& width);

struct Fact1Report {
    unsigned n = 0;
    PrecFloat max_relative_residual;
    int positive_roots = 0;
    bool passed = false;
};

/// Evaluates F_n at 2i cos(pi j / (n+1)) for 1 <= j <= n at tol.bits() of
/// precision and counts positive real roots. Passes when every
/// |F_n(z_j)| / (1 + max|coeff|) < tol and there are no positive roots.
Fact1Report verify_fact1(unsigned n, const PrecFloat& tol);

/// True iff all complex roots are real (distinct real count equals the
/// degree of the square-free part).
bool all_real_roots_check(const Polynomial& p);

struct RootCountReport {
    unsigned k = 0;
    int positive = 0;
    int negative = 0;
    bool xi_above_one = false;
    bool passed = false;
};

/// Positive/negative root counts of H^(k): one positive root above 1, and
/// one negative root exactly when k is even.
RootCountReport aitch_root_counts(unsigned k);

}  // namespace fibroots
