#pragma once

// Certified convergence experiments for the maximal roots g_n^(k) -> xi^(k).
//
// Every ordering claim is decided by separated enclosures: a < b only when
// hi(a) < lo(b). Overlaps are resolved by halving both widths down to a
// floor of 2^-200, after which InconclusiveComparison is thrown.

#include "fibroots/roots.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibroots {

class InconclusiveComparison : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Narrowest width the comparisons will refine to, 2^-200.
Rational comparison_floor();

/// -1 if a's root is below b's, +1 if above, 0 if both enclosures are the
/// same exact point. Refines the certificates in place as needed.
int certified_compare(RootCertificate& a, RootCertificate& b);

struct ConvergenceRow {
    unsigned k = 0;
    unsigned n = 0;
    Interval g_enclosure;
    std::string gap;  // midpoint(g) - midpoint(xi), scientific
    std::string parity;
    Rational width;
};

struct ConvergenceReport {
    unsigned k = 0;
    std::vector<ConvergenceRow> rows;
    Interval xi_enclosure;
    bool monotone_even_ok = true;
    bool monotone_odd_ok = true;
    bool bounds_ok = true;
    bool interleave_ok = true;
    /// |g_n - xi| < |g_{n-2} - xi| for every n >= 4, per parity.
    bool gap_ratios_ok = true;
    /// Measured |gap_n / gap_{n-2}| from midpoints, for n >= 3; display only.
    std::vector<std::pair<unsigned, double>> gap_ratios;
    std::vector<std::string> failures;

    bool passed() const { return monotone_even_ok && monotone_odd_ok && bounds_ok && interleave_ok && gap_ratios_ok; }
};

/// Rows for n = 1..n_max, each certified to at most `width` and tightened
/// further where a comparison needs it. Roots are isolated concurrently;
/// rows and checks are assembled in order of n. Requires k >= 1, n_max >= 2.
ConvergenceReport converge_table(unsigned k, unsigned n_max, const Rational& width);

struct XiScanEntry {
    unsigned k = 0;
    Interval enclosure;
};

struct XiScanReport {
    std::vector<XiScanEntry> entries;
    bool strictly_decreasing = true;
    bool all_above_one = true;
    /// lower bound of xi^(k_max) - 1.
    Rational last_minus_one;
};

/// xi^(k) for k = 1..k_max. Requires k_max >= 2.
XiScanReport xi_scan(unsigned k_max, const Rational& width);

struct Eq1ProbeRow {
    unsigned n = 0;
    PrecFloat log_abs_rhs;
    PrecFloat residual;
    PrecFloat tolerance;
    bool log_space = false;
    bool residual_ok = false;
};

struct Eq1ProbeReport {
    unsigned k = 0;
    mpfr_prec_t bits = 0;
    std::vector<Eq1ProbeRow> rows;
    /// |rhs| strictly decreasing along each parity class.
    bool decreasing = true;
    bool residuals_ok = true;

    bool passed() const { return decreasing && residuals_ok; }
};

/// Root equation at the certified g_n for n = 2..n_max. The residual at the
/// enclosure midpoint must be within |f(hi) - f(lo)| + 2^(8-bits)(1 + |lhs|),
/// f = lhs - rhs.
Eq1ProbeReport eq1_convergence_probe(unsigned k, unsigned n_max, mpfr_prec_t bits);

}  // namespace fibroots
