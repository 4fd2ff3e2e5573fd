#include "fibroots/families.hpp"

#include <mutex>
#include <tuple>

namespace fibroots {

namespace {

// Grows a cached prefix of a two-term recurrence on demand.
template <class T>
class SequenceCache {
public:
    template <class Seed, class Step>
    T get(unsigned key, unsigned n, Seed seed, Step step) {
        std::lock_guard<std::mutex> lock(mutex_);
        std::vector<T>& seq = sequences_[key];
        if (seq.empty()) {
            auto [s0, s1] = seed();
            seq.push_back(std::move(s0));
            seq.push_back(std::move(s1));
        }
        while (seq.size() <= n) seq.push_back(step(seq[seq.size() - 1], seq[seq.size() - 2]));
        return seq[n];
    }

private:
    std::mutex mutex_;
    std::map<unsigned, std::vector<T>> sequences_;
};

SequenceCache<Polynomial>& poly_cache(Family f) {
    static SequenceCache<Polynomial> caches[7];
    return caches[static_cast<int>(f)];
}

SequenceCache<BiPolynomial>& bipoly_cache(Family f) {
    static SequenceCache<BiPolynomial> caches[2];
    return caches[f == Family::BFP1 ? 0 : 1];
}

void require_k(unsigned k) {
    if (k == 0) throw std::invalid_argument("family parameter k must be positive");
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
    static constexpr std::pair<std::string_view, Family> table[] = {
        {"F", Family::F},       {"G", Family::G},       {"H", Family::H},         {"BFP1", Family::BFP1},
        {"BFP2", Family::BFP2}, {"HSEQ", Family::HSEQ}, {"LUCAS", Family::LUCAS},
    };
    for (const auto& [label, f] : table) {
        if (label == name) return f;
    }
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::H: return "H";
        case Family::BFP1: return "BFP1";
        case Family::BFP2: return "BFP2";
        case Family::HSEQ: return "HSEQ";
        case Family::LUCAS: return "LUCAS";
    }
    return "?";
}

bool is_bivariate(Family f) { return f == Family::BFP1 || f == Family::BFP2; }

Polynomial fib(unsigned n) {
    return poly_cache(Family::F).get(
        0, n, [] { return std::pair{Polynomial{1}, Polynomial::x()}; },
        [](const Polynomial& prev, const Polynomial& prev2) { return shift_up(prev, 1) + prev2; });
}

Polynomial gee(unsigned k, unsigned n) {
    require_k(k);
    return poly_cache(Family::G).get(
        k, n, [] { return std::pair{Polynomial{-1}, Polynomial{-1, 1}}; },
        [k](const Polynomial& prev, const Polynomial& prev2) { return shift_up(prev, k) + prev2; });
}

Polynomial aitch(unsigned k) {
    require_k(k);
    Polynomial out = Polynomial::monomial(1, k) - Polynomial::monomial(1, k - 1);
    return out + Polynomial{-2, 1};
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Polynomial fib_explicit(unsigned n) {
    std::vector<Integer> v(n + 1);
    for (long j = 0; 2 * j <= static_cast<long>(n); ++j) {
        v[n - 2 * j] = binomial(static_cast<long>(n) - j, j);
    }
    return Polynomial(std::move(v));
}

BiPolynomial bfp1(unsigned n) {
    return bipoly_cache(Family::BFP1).get(
        0, n, [] { return std::pair{BiPolynomial::x(), BiPolynomial::y()}; },
        [](const BiPolynomial& prev, const BiPolynomial& prev2) {
            return BiPolynomial::x() * prev + BiPolynomial::y() * prev2;
        });
}

BiPolynomial bfp1_explicit(unsigned n) {
    if (n == 0) throw std::invalid_argument("bfp1_explicit requires n >= 1");
    if (n == 1) return BiPolynomial::y();
    const long nn = n;
    BiPolynomial out;
    for (long k = 1; nn - 2 * k + 1 >= 0; ++k) {
        Integer numer = Integer(2 * nn - 3 * k + 1) * binomial(nn - k, k - 1);
        if (numer == 0) continue;
        Integer coeff, rem;
        Integer denom(nn - k);
        mpz_tdiv_qr(coeff.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
        if (rem != 0) throw std::logic_error("bfp1_explicit: non-integral coefficient");
        out += BiPolynomial::term(coeff, static_cast<unsigned>(nn - 2 * k + 1), static_cast<unsigned>(k));
    }
    return out;
}

BiPolynomial bfp2(unsigned n) {
    return bipoly_cache(Family::BFP2).get(
        0, n, [] { return std::pair{BiPolynomial::y(), BiPolynomial::x()}; },
        [](const BiPolynomial& prev, const BiPolynomial& prev2) {
            return BiPolynomial::x() * prev + BiPolynomial::y() * prev2;
        });
}

namespace {

Integer q_poly(long n, long k) {
    Integer nn(n);
    return nn * nn * nn - Integer(3 * (2 * k - 1)) * nn * nn + Integer(13 * k * (k - 1) + 2) * nn -
           Integer(k * (k - 1) * (9 * k - 4));
}

}  // namespace

std::vector<Rational> f1y_terms(unsigned n) {
    if (n < 2) throw std::invalid_argument("f1y_explicit requires n >= 2");
    const long nn = n;
    std::vector<Rational> terms;
    for (long k = 0; nn - k - 1 >= 0 && nn - 2 * k + 2 >= 0; ++k) {
        Rational t(factorial(static_cast<unsigned>(nn - k - 1)) * q_poly(nn, k),
                   factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(nn - 2 * k + 2)));
        t.canonicalize();
        terms.push_back(t);
    }
    return terms;
}

Polynomial f1y_explicit(unsigned n) {
    if (n == 2) return Polynomial{1, 0, 1};
    std::vector<Rational> terms = f1y_terms(n);
    std::vector<Integer> coeffs;
    coeffs.reserve(terms.size());
    for (const Rational& t : terms) {
        if (t.get_den() != 1) throw std::logic_error("f1y_explicit: non-integral coefficient");
        coeffs.push_back(t.get_num());
    }
    return Polynomial(std::move(coeffs));
}

Polynomial hseq(unsigned n) {
    return poly_cache(Family::HSEQ).get(
        0, n, [] { return std::pair{Polynomial{2}, Polynomial{1}}; },
        [](const Polynomial& prev, const Polynomial& prev2) { return prev + shift_up(prev2, 1); });
}

Polynomial lucas(unsigned n) {
    return poly_cache(Family::LUCAS).get(
        0, n, [] { return std::pair{Polynomial{2}, Polynomial::x()}; },
        [](const Polynomial& prev, const Polynomial& prev2) { return shift_up(prev, 1) + prev2; });
}

Integer jacobsthal_lucas(unsigned n) { return bfp2(n).eval(1, 2); }

Polynomial univariate_member(const FamilyId& id, unsigned n) {
    switch (id.tag) {
        case Family::F: return fib(n);
        case Family::G: return gee(id.k, n);
        case Family::H: return aitch(id.k);
        case Family::HSEQ: return hseq(n);
        case Family::LUCAS: return lucas(n);
        default: break;
    }
    throw std::invalid_argument("family '" + std::string(family_name(id.tag)) + "' is bivariate");
}

BiPolynomial bivariate_member(Family f, unsigned n) {
    if (f == Family::BFP1) return bfp1(n);
    if (f == Family::BFP2) return bfp2(n);
    throw std::invalid_argument("family '" + std::string(family_name(f)) + "' is univariate");
}

}  // namespace fibroots
