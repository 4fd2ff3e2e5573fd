#pragma once

// Truncated expansion of rational generating functions N(t) / D(t) whose
// coefficients live in a polynomial ring (Polynomial or BiPolynomial).

#include "fibroots/arith.hpp"
#include "fibroots/families.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace fibroots {

class UnknownFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// numerator[i] and denominator[i] are the coefficients of t^i.
/// The denominator's constant term must be exactly 1.
template <class Ring>
struct RationalGF {
    std::vector<Ring> numerator;
    std::vector<Ring> denominator;
};

template <class Ring>
struct SeriesTruncation {
    unsigned order = 0;
    std::vector<Ring> coeffs;  // size order + 1
};

/// Coefficients of t^0..t^order from the recurrence the denominator induces:
///   c_n = N_n - sum_{i>=1} D_i c_{n-i}.
template <class Ring>
SeriesTruncation<Ring> series_expand(const RationalGF<Ring>& gf, unsigned order) {
    if (gf.denominator.empty() || !(gf.denominator.front() == Ring::constant(1))) {
        throw std::invalid_argument("series_expand: denominator constant term must be 1");
    }
    SeriesTruncation<Ring> out;
    out.order = order;
    out.coeffs.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        Ring c = n < gf.numerator.size() ? gf.numerator[n] : Ring();
        for (std::size_t i = 1; i < gf.denominator.size() && i <= n; ++i) {
            if (gf.denominator[i].is_zero()) continue;
            c -= gf.denominator[i] * out.coeffs[n - i];
        }
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

/// ((x^k + x - 1) t - 1) / (1 - x^k t - t^2)
RationalGF<Polynomial> gee_gf(unsigned k);
/// 1 / (1 - x t - t^2)
RationalGF<Polynomial> fib_gf();
/// (2 - t) / (1 - t - x t^2)
RationalGF<Polynomial> hseq_gf();
/// (2 - x t) / (1 - x t - t^2)
RationalGF<Polynomial> lucas_gf();
/// (x + (y - x^2) t) / (1 - x t - y t^2)
RationalGF<BiPolynomial> bfp1_gf();
/// (y + (x - x y) t) / (1 - x t - y t^2)
RationalGF<BiPolynomial> bfp2_gf();

using AnyGF = std::variant<RationalGF<Polynomial>, RationalGF<BiPolynomial>>;

/// Generating function of a sequence family; throws UnknownFamily for H,
/// which is a single polynomial rather than a sequence.
AnyGF family_gf(const FamilyId& id);

struct GfReport {
    FamilyId family;
    unsigned max_index = 0;
    bool passed = true;
    std::optional<unsigned> first_mismatch;
};

/// Compares the series coefficients against the recurrence constructors for
/// every index <= order.
GfReport gf_check(const FamilyId& family, unsigned order);

}  // namespace fibroots
