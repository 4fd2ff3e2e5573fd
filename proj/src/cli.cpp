#include "fibroots/cli.hpp"

#include "fibroots/binet.hpp"
#include "fibroots/condense.hpp"
#include "fibroots/convergence.hpp"
#include "fibroots/decimal.hpp"
#include "fibroots/families.hpp"
#include "fibroots/genfun.hpp"
#include "fibroots/identities.hpp"
#include "fibroots/roots.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <map>
#include <ostream>
#include <set>

namespace fibroots {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Plain, Csv, Json };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> kFamilies{"F", "G", "H", "BFP1", "BFP2", "HSEQ", "LUCAS"};
const std::vector<std::string> kSuites{"fact1", "fact2", "fact3", "fact4", "fact5", "fact6",
                                       "fact7", "theorem", "appendix", "all"};

const CLI::Range kPositive(1u, 1000000u);

void add_format(CLI::App* sub, Format& format) {
    static const std::map<std::string, Format> names{{"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
    sub->add_option("--format", format, "Output format: plain, csv or json")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case))
        ->default_str("plain");
}

Json json_integer(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json json_coefficients(const Polynomial& p) {
    Json out = Json::array();
    for (const Integer& c : p.coeffs()) out.push_back(json_integer(c));
    return out;
}

// (x exponent, y exponent, coefficient), descending in the x exponent.
Json json_terms(const BiPolynomial& p) {
    Json out = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        out.push_back(Json::array({it->first.first, it->first.second, json_integer(it->second)}));
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string width_string(const Rational& w) { return w == 0 ? "0" : scientific(w, 6); }

// Outward-rounded decimal endpoints with the largest d such that 10^-d is
// at least the width, so lo and hi part only in the last printed digit.
std::pair<std::string, std::string> decimal_enclosure(const Interval& iv) {
    if (iv.is_point()) {
        const std::string v = exact_string(iv.lo);
        return {v, v};
    }
    int digits = decimals_for(iv.width());
    Integer ten_d;
    mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    if (digits > 0 && iv.width() * ten_d != 1) --digits;
    return {decimal_floor(iv.lo, digits), decimal_ceil(iv.hi, digits)};
}

Json json_interval(const Interval& iv) {
    const auto [lo, hi] = decimal_enclosure(iv);
    return Json{{"lo", lo}, {"hi", hi}, {"lo_exact", iv.lo.get_str()}, {"hi_exact", iv.hi.get_str()}};
}

Family require_family(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw UsageError("unknown family '" + name + "'");
    return *f;
}

bool family_uses_k(Family f) { return f == Family::G || f == Family::H; }

// ---- poly -------------------------------------------------------------------

struct PolyArgs {
    std::string family;
    unsigned k = 1;
    std::optional<unsigned> n;
    Format format = Format::Plain;
};

int cmd_poly(const PolyArgs& a, std::ostream& out) {
    const Family f = require_family(a.family);
    if (f != Family::H && !a.n) throw UsageError("--n is required for family " + a.family);
    const unsigned n = a.n.value_or(0);

    if (is_bivariate(f)) {
        const BiPolynomial p = bivariate_member(f, n);
        if (a.format == Format::Json) {
            out << Json{{"family", a.family}, {"n", n}, {"terms", json_terms(p)}}.dump(2) << '\n';
        } else if (a.format == Format::Csv) {
            out << "i,j,coeff\n";
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
                out << it->first.first << ',' << it->first.second << ',' << it->second.get_str() << '\n';
            }
        } else {
            bool first = true;
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
                out << (first ? "" : " ") << '(' << it->first.first << ',' << it->first.second << ','
                    << it->second.get_str() << ')';
                first = false;
            }
            out << '\n';
        }
        return kExitOk;
    }

    const Polynomial p = univariate_member({f, a.k}, n);
    if (a.format == Format::Json) {
        Json j{{"family", a.family}};
        if (family_uses_k(f)) j["k"] = a.k;
        if (f != Family::H) j["n"] = n;
        j["degree"] = p.degree();
        j["coefficients"] = json_coefficients(p);
        out << j.dump(2) << '\n';
    } else if (a.format == Format::Csv) {
        out << "power,coeff\n";
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) out << i << ',' << p.coeffs()[i].get_str() << '\n';
    } else {
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) out << (i ? " " : "") << p.coeffs()[i].get_str();
        out << '\n';
    }
    return kExitOk;
}

// ---- maxroot / xi -----------------------------------------------------------

struct RootArgs {
    std::string family = "G";
    unsigned k = 1;
    unsigned n = 0;
    unsigned prec = 80;
    Format format = Format::Plain;
};

void print_root(const std::string& label, Json head, const RootCertificate& cert, unsigned prec, Format format,
                std::ostream& out) {
    const Interval& iv = cert.enclosure;
    const auto [lo, hi] = decimal_enclosure(iv);
    const std::string width = width_string(iv.width());
    if (format == Format::Json) {
        head["lo"] = lo;
        head["hi"] = hi;
        head["lo_exact"] = iv.lo.get_str();
        head["hi_exact"] = iv.hi.get_str();
        head["width"] = width;
        head["exact"] = iv.is_point();
        head["prec_bits"] = prec;
        out << head.dump(2) << '\n';
    } else if (format == Format::Csv) {
        std::string keys, values;
        for (const auto& [key, value] : head.items()) {
            keys += key + ",";
            values += (value.is_string() ? value.get<std::string>() : value.dump()) + ",";
        }
        out << keys << "lo,hi,width,exact\n";
        out << values << lo << ',' << hi << ',' << width << ',' << (iv.is_point() ? "true" : "false") << '\n';
    } else {
        out << label << '\n';
        out << "lo     " << lo << '\n';
        out << "hi     " << hi << '\n';
        out << "width  " << width << (iv.is_point() ? " (exact)" : "") << '\n';
    }
}

int cmd_maxroot(const RootArgs& a, std::ostream& out) {
    const Family f = require_family(a.family);
    if (is_bivariate(f)) throw UsageError("maxroot needs a univariate family");
    const Polynomial p = univariate_member({f, a.k}, a.n);
    const RootCertificate cert = refine(isolate_max_real_root(p), pow2_neg(a.prec));
    Json head{{"family", a.family}};
    if (family_uses_k(f)) head["k"] = a.k;
    if (f != Family::H) head["n"] = a.n;
    std::string label = a.family;
    if (family_uses_k(f)) label += " k=" + std::to_string(a.k);
    if (f != Family::H) label += " n=" + std::to_string(a.n);
    print_root(label + " maximal real root", head, cert, a.prec, a.format, out);
    return kExitOk;
}

int cmd_xi(const RootArgs& a, std::ostream& out) {
    const RootCertificate cert = xi(a.k, pow2_neg(a.prec));
    print_root("xi k=" + std::to_string(a.k), Json{{"k", a.k}}, cert, a.prec, a.format, out);
    return kExitOk;
}

// ---- converge ---------------------------------------------------------------

struct ConvergeArgs {
    unsigned k = 1;
    unsigned n_max = 40;
    unsigned prec = 80;
    Format format = Format::Plain;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_converge(const ConvergeArgs& a, std::ostream& out) {
    const ConvergenceReport r = converge_table(a.k, a.n_max, pow2_neg(a.prec));
    if (a.format == Format::Json) {
        Json rows = Json::array();
        for (const auto& row : r.rows) {
            rows.push_back(Json{{"k", row.k},
                                {"n", row.n},
                                {"g_enclosure", json_interval(row.g_enclosure)},
                                {"gap", row.gap},
                                {"parity", row.parity},
                                {"width", width_string(row.width)}});
        }
        Json ratios = Json::array();
        for (const auto& [n, ratio] : r.gap_ratios) ratios.push_back(Json{{"n", n}, {"ratio", ratio}});
        out << Json{{"k", r.k},
                    {"rows", rows},
                    {"xi_enclosure", json_interval(r.xi_enclosure)},
                    {"monotone_even_ok", r.monotone_even_ok},
                    {"monotone_odd_ok", r.monotone_odd_ok},
                    {"bounds_ok", r.bounds_ok},
                    {"interleave_ok", r.interleave_ok},
                    {"gap_ratios_ok", r.gap_ratios_ok},
                    {"gap_ratios", ratios},
                    {"failures", r.failures}}
                   .dump(2)
            << '\n';
    } else if (a.format == Format::Csv) {
        out << "k,n,parity,g_lo,g_hi,gap,width\n";
        for (const auto& row : r.rows) {
            const auto [lo, hi] = decimal_enclosure(row.g_enclosure);
            out << row.k << ',' << row.n << ',' << row.parity << ',' << lo << ',' << hi << ',' << row.gap << ','
                << width_string(row.width) << '\n';
        }
    } else {
        const auto [xlo, xhi] = decimal_enclosure(r.xi_enclosure);
        out << "k=" << r.k << "  xi in [" << xlo << ", " << xhi << "]\n";
        for (const auto& row : r.rows) {
            const auto [lo, hi] = decimal_enclosure(row.g_enclosure);
            out << std::string(row.n < 10 ? 2 : row.n < 100 ? 1 : 0, ' ') << row.n << "  " << row.parity
                << (row.parity == "odd" ? "   " : "  ") << '[' << lo << ", " << hi << "]  gap " << row.gap << '\n';
        }
        out << "monotone even " << yes_no(r.monotone_even_ok) << ", monotone odd " << yes_no(r.monotone_odd_ok)
            << ", within [1,2] " << yes_no(r.bounds_ok) << ", interleaved " << yes_no(r.interleave_ok)
            << ", gaps shrinking " << yes_no(r.gap_ratios_ok) << '\n';
        for (const auto& f : r.failures) out << "failure: " << f << '\n';
    }
    return r.passed() ? kExitOk : kExitFailed;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    unsigned n_max = 30;
    unsigned k_max = 4;
    unsigned prec = 128;
    Format format = Format::Plain;
};

// Runs `one` for every index in [lo, hi]; the first failure becomes the
// counterexample and distinct notes are kept in order.
CheckReport over_range(std::string name, unsigned lo, unsigned hi, const std::function<CheckReport(unsigned)>& one) {
    CheckReport total(std::move(name));
    std::set<std::string> seen;
    for (unsigned i = lo; i <= hi; ++i) {
        CheckReport r = one(i);
        if (!r.passed) total.fail(r.name + ": " + r.counterexample.value_or("failed"));
        for (auto& note : r.notes) {
            if (seen.insert(note).second) total.notes.push_back(std::move(note));
        }
    }
    return total;
}

std::string range_tag(const char* var, unsigned lo, unsigned hi) {
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

CheckReport from_gf(const GfReport& g, unsigned order) {
    std::string name = "gf " + std::string(family_name(g.family.tag));
    if (g.family.tag == Family::G) name += " k=" + std::to_string(g.family.k);
    CheckReport r(name);
    r.detail = "series prefix to order " + std::to_string(order) + " matches the recurrence";
    if (!g.passed) r.fail("coefficient of t^" + std::to_string(g.first_mismatch.value_or(0)));
    return r;
}

void suite_fact1(const VerifyArgs& a, std::vector<CheckReport>& out) {
    const PrecFloat tol = PrecFloat::parse("1e-25", a.prec);
    PrecFloat worst(a.prec);
    CheckReport r = over_range("fact1 " + range_tag("n", 1, a.n_max), 1, a.n_max, [&](unsigned n) {
        const Fact1Report f = verify_fact1(n, tol);
        if (f.max_relative_residual > worst) worst = f.max_relative_residual;
        CheckReport one("n=" + std::to_string(n));
        if (f.positive_roots != 0) one.fail(std::to_string(f.positive_roots) + " positive roots");
        if (!f.passed) one.fail("relative residual " + f.max_relative_residual.to_scientific(6));
        return one;
    });
    r.detail = "no positive roots; max relative residual at 2i cos(pi j/(n+1)) " + worst.to_scientific(6);
    out.push_back(std::move(r));
}

void suite_fact2(const VerifyArgs& a, std::vector<CheckReport>& out) {
    out.push_back(from_gf(gf_check({Family::F, 1}, a.n_max), a.n_max));
    for (unsigned k = 1; k <= a.k_max; ++k) out.push_back(from_gf(gf_check({Family::G, k}, a.n_max), a.n_max));
}

void suite_fact3(const VerifyArgs& a, std::vector<CheckReport>& out) {
    for (unsigned k = 1; k <= a.k_max; ++k) {
        CheckReport r = over_range("fact3 k=" + std::to_string(k) + " " + range_tag("n", 2, a.n_max), 2, a.n_max,
                                   [k](unsigned n) { return fact3_check(k, n); });
        r.detail = "G_n F_{n-2}(x^k) = G_{n-1} F_{n-1}(x^k) + (-1)^(n-1), exact";
        out.push_back(std::move(r));
    }
    const unsigned det_max = std::min(12u, a.n_max);
    for (unsigned k = 1; k <= a.k_max; ++k) {
        CheckReport r = over_range("det k=" + std::to_string(k) + " " + range_tag("n", 1, det_max), 1, det_max,
                                   [k](unsigned n) { return determinant_check(k, n); });
        r.detail = "tridiagonal recurrence and Dodgson condensation both give G_n";
        out.push_back(std::move(r));
    }
}

void suite_fact4(const VerifyArgs& a, std::vector<CheckReport>& out) {
    for (unsigned k = 1; k <= a.k_max; ++k) {
        CheckReport r = over_range("fact4 k=" + std::to_string(k) + " " + range_tag("n", 2, a.n_max), 2, a.n_max,
                                   [k](unsigned n) { return fact4_check(k, n); });
        r.detail = "both interleaving identities, exact";
        out.push_back(std::move(r));
    }
    for (unsigned k = 1; k <= a.k_max; ++k) {
        const ConvergenceReport c = converge_table(k, std::max(a.n_max, 2u), default_width());
        CheckReport r("fact4 roots k=" + std::to_string(k) + " " + range_tag("n", 1, std::max(a.n_max, 2u)));
        if (!c.monotone_even_ok || !c.monotone_odd_ok) r.fail(c.failures.empty() ? "not monotone" : c.failures.front());
        r.detail = "even-index maximal roots decrease, odd-index increase (separated enclosures)";
        out.push_back(std::move(r));
    }
}

void suite_fact5(const VerifyArgs& a, std::vector<CheckReport>& out) {
    const PrecFloat tol = ldexp(PrecFloat(1, a.prec), 32 - static_cast<long>(a.prec));
    CheckReport r = binet_check(a.k_max, a.n_max, 16, tol);
    r.name = "fact5 " + r.name;
    r.detail += ", tolerance " + tol.to_scientific(3);
    out.push_back(std::move(r));
}

void suite_fact67(const VerifyArgs& a, bool negative, std::vector<CheckReport>& out) {
    const unsigned k_hi = std::max(a.k_max, 8u);
    CheckReport r((negative ? "fact7 " : "fact6 ") + range_tag("k", 1, k_hi));
    for (unsigned k = 1; k <= k_hi; ++k) {
        const RootCountReport c = aitch_root_counts(k);
        const std::string tag = "k=" + std::to_string(k) + ": ";
        if (negative) {
            const int want = k % 2 == 0 ? 1 : 0;
            if (c.negative != want) r.fail(tag + std::to_string(c.negative) + " negative roots");
        } else {
            if (c.positive != 1) r.fail(tag + std::to_string(c.positive) + " positive roots");
            if (!c.xi_above_one) r.fail(tag + "positive root not above 1");
        }
    }
    r.detail = negative ? "H^(k) has one negative root for even k, none for odd k (Sturm counts)"
                        : "H^(k) has exactly one positive root, above 1 (Sturm counts)";
    out.push_back(std::move(r));
}

void suite_theorem(const VerifyArgs& a, std::vector<CheckReport>& out) {
    const unsigned n_max = std::max(a.n_max, 2u);
    for (unsigned k = 1; k <= a.k_max; ++k) {
        const ConvergenceReport c = converge_table(k, n_max, default_width());
        CheckReport r("theorem k=" + std::to_string(k) + " " + range_tag("n", 1, n_max));
        for (const auto& f : c.failures) r.fail(f);
        r.detail = "monotone, interleaved around xi, within [1,2]; final gap " + c.rows.back().gap;
        out.push_back(std::move(r));
    }
    const XiScanReport s = xi_scan(std::max(a.k_max, 2u), default_width());
    CheckReport scan("xi decreasing " + range_tag("k", 1, std::max(a.k_max, 2u)));
    if (!s.strictly_decreasing) scan.fail("xi^(k) not strictly decreasing");
    if (!s.all_above_one) scan.fail("xi^(k) not above 1");
    scan.detail = "xi^(k_max) - 1 >= " + scientific(s.last_minus_one, 6);
    out.push_back(std::move(scan));
    for (unsigned k = 1; k <= a.k_max; ++k) {
        const Eq1ProbeReport p = eq1_convergence_probe(k, n_max, static_cast<mpfr_prec_t>(a.prec));
        CheckReport r("eq1 k=" + std::to_string(k) + " " + range_tag("n", 2, n_max));
        for (const auto& row : p.rows) {
            if (!row.residual_ok) r.fail("n=" + std::to_string(row.n) + " residual " + row.residual.to_scientific(6));
        }
        if (!p.decreasing) r.fail("|rhs| not decreasing along a parity class");
        r.detail = "residual vanishes at certified roots; ln|rhs| at n=" + std::to_string(n_max) + " is " +
                   p.rows.back().log_abs_rhs.to_scientific(6);
        out.push_back(std::move(r));
    }
}

void suite_appendix(const VerifyArgs& a, std::vector<CheckReport>& out) {
    const unsigned n_max = std::max(a.n_max, 2u);
    CheckReport affine = over_range("affine " + range_tag("n", 2, n_max), 2, n_max, [](unsigned n) { return affine_check(n); });
    affine.detail = "f_n(x, y^2) = x y^(n-1) F_{n-1}(x/y) + y^(n+2) F_{n-2}(x/y)";
    out.push_back(std::move(affine));

    CheckReport split("coefficient split " + range_tag("n", 2, n_max));
    bool literal_any = false, literal_unsquared_all = true;
    for (unsigned n = 2; n <= n_max; ++n) {
        const SplitReport s = fib_coeff_split_check(n);
        if (!s.squared_matches && !s.literal_matches) split.fail("n=" + std::to_string(n) + " neither reading matches");
        literal_any = literal_any || s.literal_matches;
        literal_unsquared_all = literal_unsquared_all && s.literal_matches_unsquared;
    }
    split.detail = "the y^(2k), y^(2k+4) reading matches f_n(x, y^2)";
    if (!literal_any) {
        split.notes.push_back(literal_unsquared_all
                                  ? "the literal y^k, y^(k+2) reading matches f_n(x, y), not f_n(x, y^2)"
                                  : "the literal y^k, y^(k+2) reading does not match f_n(x, y^2)");
    }
    out.push_back(std::move(split));

    CheckReport jac("jacobsthal-lucas " + range_tag("n", 2, n_max));
    std::optional<unsigned> swapped_fails;
    PrecFloat worst(a.prec);
    for (unsigned n = 2; n <= n_max; ++n) {
        const JacobsthalReport j = jacobsthal_identity_check(n, a.prec);
        if (!j.passed) jac.fail("n=" + std::to_string(n) + " relative error " + j.relative_error.to_scientific(6));
        if (j.relative_error > worst) worst = j.relative_error;
        if (!j.swapped_matches && !swapped_fails) swapped_fails = n;
    }
    jac.detail = "matches J_n = f_n(1, 2), max relative error " + worst.to_scientific(6);
    if (swapped_fails) {
        const unsigned n = *swapped_fails;
        jac.notes.push_back("the argument order f_n(2, 1) does not match: n=" + std::to_string(n) + " gives " +
                            bfp2(n).eval(2, 1).get_str() + " but J_" + std::to_string(n) + " = " +
                            jacobsthal_lucas(n).get_str());
    }
    out.push_back(std::move(jac));

    CheckReport lucas = over_range("lucas relation " + range_tag("n", 0, n_max), 0, n_max,
                                   [](unsigned n) { return lucas_relation_check(n); });
    lucas.detail = "x^n h_n(1/x^2) = L_n(x) with no negative exponents";
    out.push_back(std::move(lucas));

    CheckReport fib_form("fib binomial form " + range_tag("n", 0, n_max));
    for (unsigned n = 0; n <= n_max; ++n) {
        if (fib_explicit(n) != fib(n)) fib_form.fail("n=" + std::to_string(n));
    }
    fib_form.detail = "F_n = sum C(n-j, j) x^(n-2j)";
    out.push_back(std::move(fib_form));

    CheckReport bfp1_form("bfp1 closed form " + range_tag("n", 1, n_max));
    for (unsigned n = 1; n <= n_max; ++n) {
        if (!(bfp1_explicit(n) == bfp1(n))) bfp1_form.fail("n=" + std::to_string(n));
    }
    bfp1_form.detail = "sum (2n-3k+1)/(n-k) C(n-k, k-1) x^(n-2k+1) y^k matches the recurrence";
    out.push_back(std::move(bfp1_form));

    CheckReport f1y("f_n(1, y) factorial formula " + range_tag("n", 2, n_max));
    for (unsigned n = 2; n <= n_max; ++n) {
        try {
            if (f1y_explicit(n) != bfp2(n).at_x(1)) f1y.fail("n=" + std::to_string(n));
        } catch (const std::logic_error& e) {
            f1y.fail("n=" + std::to_string(n) + ": " + e.what());
        }
    }
    f1y.detail = "sum over n-k-1 >= 0 and n-2k+2 >= 0; n=2 is 1 + y^2";
    out.push_back(std::move(f1y));

    for (Family f : {Family::BFP1, Family::BFP2, Family::HSEQ, Family::LUCAS}) out.push_back(from_gf(gf_check({f, 1}, n_max), n_max));

    const auto shift = bfp2_fib_index_shift(n_max);
    CheckReport index("f_m(x, 1) index alignment " + range_tag("m", 0, n_max));
    if (!shift) index.fail("no shift in -2..2 aligns f_m(x, 1) with F");
    else index.detail = "f_m(x, 1) = F_{m" + (*shift == 0 ? std::string() : (*shift > 0 ? "+" : "") + std::to_string(*shift)) + "}(x)";
    out.push_back(std::move(index));
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<CheckReport> checks;
    const bool all = a.suite == "all";
    if (all || a.suite == "fact1") suite_fact1(a, checks);
    if (all || a.suite == "fact2") suite_fact2(a, checks);
    if (all || a.suite == "fact3") suite_fact3(a, checks);
    if (all || a.suite == "fact4") suite_fact4(a, checks);
    if (all || a.suite == "fact5") suite_fact5(a, checks);
    if (all || a.suite == "fact6") suite_fact67(a, false, checks);
    if (all || a.suite == "fact7") suite_fact67(a, true, checks);
    if (all || a.suite == "theorem") suite_theorem(a, checks);
    if (all || a.suite == "appendix") suite_appendix(a, checks);

    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.passed ? 0 : 1;

    if (a.format == Format::Json) {
        Json list = Json::array();
        for (const auto& c : checks) {
            list.push_back(Json{{"name", c.name},
                                {"passed", c.passed},
                                {"detail", c.detail},
                                {"counterexample", c.counterexample ? Json(*c.counterexample) : Json(nullptr)},
                                {"notes", c.notes}});
        }
        out << Json{{"suite", a.suite}, {"passed", failed == 0}, {"failed", failed}, {"checks", list}}.dump(2) << '\n';
    } else if (a.format == Format::Csv) {
        out << "suite,check,passed,detail,counterexample,notes\n";
        for (const auto& c : checks) {
            std::string notes;
            for (const auto& n : c.notes) notes += (notes.empty() ? "" : "; ") + n;
            out << a.suite << ',' << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail)
                << ',' << csv_field(c.counterexample.value_or("")) << ',' << csv_field(notes) << '\n';
        }
    } else {
        for (const auto& c : checks) {
            out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
            if (!c.detail.empty()) out << "  " << c.detail;
            out << '\n';
            if (c.counterexample) out << "      first failure: " << *c.counterexample << '\n';
            for (const auto& n : c.notes) out << "      note: " << n << '\n';
        }
        out << "suite " << a.suite << ": " << checks.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? kExitOk : kExitFailed;
}

// ---- series -----------------------------------------------------------------

struct SeriesArgs {
    std::string family;
    unsigned k = 1;
    unsigned order = 25;
    Format format = Format::Plain;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
    const FamilyId id{require_family(a.family), a.k};
    std::vector<std::string> coeffs;
    std::visit(
        [&](const auto& gf) {
            for (const auto& c : series_expand(gf, a.order).coeffs) coeffs.push_back(c.to_string());
        },
        family_gf(id));
    const GfReport g = gf_check(id, a.order);
    if (a.format == Format::Json) {
        Json j{{"family", a.family}};
        if (id.tag == Family::G) j["k"] = a.k;
        j["order"] = a.order;
        j["coefficients"] = coeffs;
        j["passed"] = g.passed;
        j["first_mismatch"] = g.first_mismatch ? Json(*g.first_mismatch) : Json(nullptr);
        out << j.dump(2) << '\n';
    } else if (a.format == Format::Csv) {
        out << "power,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << csv_field(coeffs[i]) << '\n';
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << "t^" << i << ": " << coeffs[i] << '\n';
        out << (g.passed ? "PASS" : "FAIL") << "  series matches the recurrence through t^" << a.order;
        if (g.first_mismatch) out << " (first mismatch at t^" << *g.first_mismatch << ')';
        out << '\n';
    }
    return g.passed ? kExitOk : kExitFailed;
}

// ---- det --------------------------------------------------------------------

struct DetArgs {
    unsigned k = 1;
    unsigned n = 1;
    Format format = Format::Plain;
};

int cmd_det(const DetArgs& a, std::ostream& out) {
    const CheckReport r = determinant_check(a.k, a.n);
    const Polynomial det = tridiag_det(gee_matrix(a.k, a.n));
    if (a.format == Format::Json) {
        out << Json{{"k", a.k},
                    {"n", a.n},
                    {"determinant", det.to_string()},
                    {"coefficients", json_coefficients(det)},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)},
                    {"notes", r.notes}}
                   .dump(2)
            << '\n';
    } else if (a.format == Format::Csv) {
        out << "k,n,determinant,passed,detail\n";
        out << a.k << ',' << a.n << ',' << csv_field(det.to_string()) << ',' << (r.passed ? "true" : "false") << ','
            << csv_field(r.detail) << '\n';
    } else {
        out << "det = " << det.to_string() << '\n';
        out << (r.passed ? "PASS  " : "FAIL  ") << r.detail << '\n';
        if (r.counterexample) out << "      first failure: " << *r.counterexample << '\n';
        for (const auto& n : r.notes) out << "      note: " << n << '\n';
    }
    return r.passed ? kExitOk : kExitFailed;
}

// ---- bivariate --------------------------------------------------------------

struct BivariateArgs {
    std::string family;
    unsigned n = 0;
    std::optional<long> x;
    std::optional<long> y;
    Format format = Format::Plain;
};

int cmd_bivariate(const BivariateArgs& a, std::ostream& out) {
    const Family f = require_family(a.family);
    if (!is_bivariate(f)) throw UsageError("bivariate needs BFP1 or BFP2");
    if (a.x.has_value() != a.y.has_value()) throw UsageError("--x and --y must be given together");
    const BiPolynomial p = bivariate_member(f, a.n);

    // Closed form: the BFP1 coefficient formula, or f_n(1, y) for BFP2.
    std::optional<bool> closed;
    std::string closed_name;
    if (f == Family::BFP1 && a.n >= 1) {
        closed = bfp1_explicit(a.n) == p;
        closed_name = "closed-form coefficients";
    } else if (f == Family::BFP2 && a.n >= 2) {
        try {
            closed = f1y_explicit(a.n) == p.at_x(1);
        } catch (const std::logic_error&) {
            closed = false;
        }
        closed_name = "f_n(1, y) factorial formula";
    }
    std::optional<Integer> value;
    if (a.x) value = p.eval(Integer(*a.x), Integer(*a.y));

    if (a.format == Format::Json) {
        Json j{{"family", a.family}, {"n", a.n}, {"polynomial", p.to_string()}, {"terms", json_terms(p)}};
        j["closed_form_matches"] = closed ? Json(*closed) : Json(nullptr);
        if (value) {
            j["x"] = *a.x;
            j["y"] = *a.y;
            j["value"] = json_integer(*value);
        }
        out << j.dump(2) << '\n';
    } else if (a.format == Format::Csv) {
        out << "family,n,polynomial,closed_form_matches,value\n";
        out << a.family << ',' << a.n << ',' << csv_field(p.to_string()) << ','
            << (closed ? (*closed ? "true" : "false") : "") << ',' << (value ? value->get_str() : "") << '\n';
    } else {
        out << (f == Family::BFP1 ? "g_" : "f_") << a.n << "(x, y) = " << p.to_string() << '\n';
        if (closed) out << (*closed ? "PASS  " : "FAIL  ") << closed_name << '\n';
        if (value) out << "value at (" << *a.x << ", " << *a.y << ") = " << value->get_str() << '\n';
    }
    return closed.value_or(true) ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Fibonacci-type polynomials, identity checks and certified maximal roots", "fibroots"};
    app.require_subcommand(1);

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "Coefficients of a family member (ascending powers)");
    poly->add_option("--family", poly_args.family, "F, G, H, BFP1, BFP2, HSEQ or LUCAS")->required()->check(CLI::IsMember(kFamilies));
    poly->add_option("--k", poly_args.k, "Exponent k for G and H")->check(kPositive);
    poly->add_option("--n", poly_args.n, "Index n (not used by H)");
    add_format(poly, poly_args.format);

    RootArgs maxroot_args;
    auto* maxroot = app.add_subcommand("maxroot", "Certified largest real root of a family member");
    maxroot->add_option("--family", maxroot_args.family, "Univariate family (default G)")->check(CLI::IsMember(kFamilies));
    maxroot->add_option("--k", maxroot_args.k, "Exponent k")->check(kPositive);
    maxroot->add_option("--n", maxroot_args.n, "Index n")->required();
    maxroot->add_option("--prec", maxroot_args.prec, "Enclosure width 2^-prec")->check(CLI::Range(1u, 100000u));
    add_format(maxroot, maxroot_args.format);

    RootArgs xi_args;
    auto* xi_cmd = app.add_subcommand("xi", "Certified positive root of x^k - x^(k-1) + x - 2");
    xi_cmd->add_option("--k", xi_args.k, "Exponent k")->required()->check(kPositive);
    xi_cmd->add_option("--prec", xi_args.prec, "Enclosure width 2^-prec")->check(CLI::Range(1u, 100000u));
    add_format(xi_cmd, xi_args.format);

    ConvergeArgs converge_args;
    auto* converge = app.add_subcommand("converge", "Maximal roots g_1..g_nmax against their limit");
    converge->add_option("--k", converge_args.k, "Exponent k")->required()->check(kPositive);
    converge->add_option("--n-max", converge_args.n_max, "Largest index (at least 2)")->check(CLI::Range(2u, 100000u));
    converge->add_option("--prec", converge_args.prec, "Initial enclosure width 2^-prec")->check(CLI::Range(1u, 200u));
    add_format(converge, converge_args.format);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run an identity and property suite");
    verify->add_option("--suite", verify_args.suite, "fact1..fact7, theorem, appendix or all")->required()->check(CLI::IsMember(kSuites));
    verify->add_option("--n-max", verify_args.n_max, "Largest index")->check(CLI::Range(2u, 100000u));
    verify->add_option("--k-max", verify_args.k_max, "Largest k")->check(kPositive);
    verify->add_option("--prec", verify_args.prec, "Floating precision in bits")->check(CLI::Range(64u, 100000u));
    add_format(verify, verify_args.format);

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Generating-function expansion checked against the recurrence");
    series->add_option("--family", series_args.family, "F, G, BFP1, BFP2, HSEQ or LUCAS")->required()->check(CLI::IsMember(kFamilies));
    series->add_option("--k", series_args.k, "Exponent k for G")->check(kPositive);
    series->add_option("--order", series_args.order, "Highest power of t");
    add_format(series, series_args.format);

    DetArgs det_args;
    auto* det = app.add_subcommand("det", "Determinant of the tridiagonal G matrix by both routes");
    det->add_option("--k", det_args.k, "Exponent k")->check(kPositive);
    det->add_option("--n", det_args.n, "Matrix size")->required()->check(kPositive);
    add_format(det, det_args.format);

    BivariateArgs bi_args;
    auto* bivariate = app.add_subcommand("bivariate", "Bivariate Fibonacci polynomials and their closed forms");
    bivariate->add_option("--family", bi_args.family, "BFP1 or BFP2")->required()->check(CLI::IsMember({"BFP1", "BFP2"}));
    bivariate->add_option("--n", bi_args.n, "Index n")->required();
    bivariate->add_option("--x", bi_args.x, "Integer x to evaluate at");
    bivariate->add_option("--y", bi_args.y, "Integer y to evaluate at");
    add_format(bivariate, bi_args.format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*poly) return cmd_poly(poly_args, out);
        if (*maxroot) return cmd_maxroot(maxroot_args, out);
        if (*xi_cmd) return cmd_xi(xi_args, out);
        if (*converge) return cmd_converge(converge_args, out);
        if (*verify) return cmd_verify(verify_args, out);
        if (*series) return cmd_series(series_args, out);
        if (*det) return cmd_det(det_args, out);
        if (*bivariate) return cmd_bivariate(bi_args, out);
    } catch (const NoRealRoot& e) {
        err << "no real root: " << e.what() << '\n';
        return kExitFailed;
    } catch (const InconclusiveComparison& e) {
        err << "inconclusive: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace fibroots
