#include "fibroots/convergence.hpp"

#include "fibroots/binet.hpp"
#include "fibroots/decimal.hpp"
#include "fibroots/families.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <thread>

namespace fibroots {

namespace {

// Runs fn(0..count-1) on a small worker pool; results land by index, so the
// output does not depend on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
    std::vector<std::optional<T>> slots(count);
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < count; i = next++) slots[i] = fn(i);
        }));
    }
    for (auto& f : pool) f.get();  // rethrows the first worker exception
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

RootCertificate halve(const RootCertificate& cert) {
    Rational target = cert.enclosure.width() / 2;
    if (target < comparison_floor()) target = comparison_floor();
    return refine(cert, target);
}

// Same as certified_compare, against a fixed rational.
int compare_with(RootCertificate& a, const Rational& v) {
    while (true) {
        if (a.enclosure.hi < v) return -1;
        if (a.enclosure.lo > v) return 1;
        if (a.squarefree.sign_at(v) == 0) return 0;  // the enclosure's only root
        if (a.enclosure.width() <= comparison_floor()) {
            throw InconclusiveComparison("root enclosure still contains " + exact_string(v) + " at the width floor");
        }
        a = halve(a);
    }
}

std::string parity_of(unsigned n) { return n % 2 == 0 ? "even" : "odd"; }

}  // namespace

Rational comparison_floor() { return pow2_neg(200); }

int certified_compare(RootCertificate& a, RootCertificate& b) {
    while (true) {
        if (a.enclosure.hi < b.enclosure.lo) return -1;
        if (b.enclosure.hi < a.enclosure.lo) return 1;
        if (a.exact() && b.exact()) return 0;  // overlapping points are equal
        if (a.exact()) return -compare_with(b, a.enclosure.lo);
        if (b.exact()) return compare_with(a, b.enclosure.lo);
        const Rational wa = a.enclosure.width(), wb = b.enclosure.width();
        if (std::max(wa, wb) <= comparison_floor()) {
            throw InconclusiveComparison("enclosures overlap at the width floor");
        }
        if (wa >= wb) a = halve(a);
        if (wb >= wa) b = halve(b);
    }
}

ConvergenceReport converge_table(unsigned k, unsigned n_max, const Rational& width) {
    if (k == 0) throw std::invalid_argument("converge_table requires k >= 1");
    if (n_max < 2) throw std::invalid_argument("converge_table requires n_max >= 2");
    if (width <= 0) throw std::invalid_argument("converge_table requires a positive width");

    std::vector<RootCertificate> g = parallel_map<RootCertificate>(n_max, [&](std::size_t i) {
        return refine(isolate_max_real_root(gee(k, static_cast<unsigned>(i + 1))), width);
    });
    auto at = [&](unsigned n) -> RootCertificate& { return g[n - 1]; };
    RootCertificate x = xi(k, width);

    ConvergenceReport report;
    report.k = k;
    auto failed = [&](bool& flag, std::string what) {
        flag = false;
        report.failures.push_back(std::move(what));
    };

    // side[n]: sign of g_n - xi; step[n]: sign of g_n - g_{n-2}.
    std::vector<int> side(n_max + 1, 0), step(n_max + 1, 0);
    for (unsigned n = 1; n <= n_max; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        if (compare_with(at(n), Rational(1)) < 0) failed(report.bounds_ok, tag + " below 1");
        if (compare_with(at(n), Rational(2)) > 0) failed(report.bounds_ok, tag + " above 2");
        side[n] = certified_compare(at(n), x);
        if (n >= 2) {
            const int want = n % 2 == 0 ? 1 : -1;
            if (side[n] != want) failed(report.interleave_ok, tag + (want > 0 ? " not above xi" : " not below xi"));
        }
        if (n >= 3) {
            step[n] = certified_compare(at(n), at(n - 2));
            if (n % 2 == 0 && step[n] >= 0) failed(report.monotone_even_ok, tag + " not below n=" + std::to_string(n - 2));
            if (n % 2 == 1 && step[n] <= 0) failed(report.monotone_odd_ok, tag + " not above n=" + std::to_string(n - 2));
        }
    }

    const Rational xi_mid = x.enclosure.midpoint();
    for (unsigned n = 3; n <= n_max; ++n) {
        const Rational here = at(n).enclosure.midpoint() - xi_mid;
        const Rational before = at(n - 2).enclosure.midpoint() - xi_mid;
        if (before != 0) report.gap_ratios.emplace_back(n, Rational(abs(here / before)).get_d());
        // Same side of xi and moving toward it means the gap shrank.
        if (n >= 4 && !(side[n] != 0 && side[n] == side[n - 2] && step[n] == -side[n])) {
            failed(report.gap_ratios_ok, "n=" + std::to_string(n) + " gap did not shrink");
        }
    }

    report.xi_enclosure = x.enclosure;
    for (unsigned n = 1; n <= n_max; ++n) {
        const Interval& e = at(n).enclosure;
        report.rows.push_back({k, n, e, scientific(Rational(e.midpoint() - xi_mid)), parity_of(n), e.width()});
    }
    return report;
}

XiScanReport xi_scan(unsigned k_max, const Rational& width) {
    if (k_max < 2) throw std::invalid_argument("xi_scan requires k_max >= 2");
    std::vector<RootCertificate> certs =
        parallel_map<RootCertificate>(k_max, [&](std::size_t i) { return xi(static_cast<unsigned>(i + 1), width); });
    XiScanReport report;
    for (unsigned k = 2; k <= k_max; ++k) {
        if (certified_compare(certs[k - 1], certs[k - 2]) >= 0) report.strictly_decreasing = false;
    }
    for (unsigned k = 1; k <= k_max; ++k) {
        if (certs[k - 1].enclosure.lo <= 1) report.all_above_one = false;
        report.entries.push_back({k, certs[k - 1].enclosure});
    }
    report.last_minus_one = certs.back().enclosure.lo - 1;
    return report;
}

namespace {

// Signed residual: lhs - rhs, or the log-magnitude difference in log space.
PrecFloat signed_residual(const Eq1Residual& r) {
    return r.log_space ? r.log_abs_lhs - r.log_abs_rhs : r.lhs - r.rhs;
}

}  // namespace

Eq1ProbeReport eq1_convergence_probe(unsigned k, unsigned n_max, mpfr_prec_t bits) {
    if (k == 0) throw std::invalid_argument("eq1_convergence_probe requires k >= 1");
    if (n_max < 2) throw std::invalid_argument("eq1_convergence_probe requires n_max >= 2");
    // Roots lie in [1, 2], where multiples of 2^-(bits-1) are exact at `bits`.
    const Rational grid = pow2_neg(static_cast<unsigned>(bits - 1));
    auto outward = [&](const Rational& v, bool up) {
        Rational scaled = v / grid;
        Integer q;
        if (up) {
            mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            return Rational(Rational(q + 1) * grid);
        }
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        return Rational(Rational(q - 1) * grid);
    };

    std::vector<Eq1ProbeRow> rows = parallel_map<Eq1ProbeRow>(n_max - 1, [&](std::size_t i) {
        const unsigned n = static_cast<unsigned>(i + 2);
        const RootCertificate cert = refine(isolate_max_real_root(gee(k, n)), pow2_neg(static_cast<unsigned>(bits + 1)));
        const Eq1Residual mid = eq1_residual(k, n, PrecFloat(cert.enclosure.midpoint(), bits));
        const Eq1Residual lo = eq1_residual(k, n, PrecFloat(outward(cert.enclosure.lo, false), bits));
        const Eq1Residual hi = eq1_residual(k, n, PrecFloat(outward(cert.enclosure.hi, true), bits));
        Eq1ProbeRow row;
        row.n = n;
        row.log_space = mid.log_space;
        row.log_abs_rhs = mid.log_abs_rhs;
        row.residual = abs(signed_residual(mid));
        const PrecFloat scale = mid.log_space ? abs(mid.log_abs_lhs) : abs(mid.lhs);
        row.tolerance = abs(signed_residual(hi) - signed_residual(lo)) +
                        ldexp(PrecFloat(1, bits) + scale, 8 - static_cast<long>(bits));
        row.residual_ok = row.residual <= row.tolerance;
        return row;
    });

    Eq1ProbeReport report;
    report.k = k;
    report.bits = bits;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].residual_ok) report.residuals_ok = false;
        if (i >= 2 && !(rows[i].log_abs_rhs < rows[i - 2].log_abs_rhs)) report.decreasing = false;
    }
    report.rows = std::move(rows);
    return report;
}

}  // namespace fibroots
