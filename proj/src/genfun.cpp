#include "fibroots/genfun.hpp"

namespace fibroots {

RationalGF<Polynomial> gee_gf(unsigned k) {
    if (k == 0) throw std::invalid_argument("gee_gf: k must be positive");
    Polynomial xk = Polynomial::monomial(1, k);
    return {{Polynomial{-1}, xk + Polynomial{-1, 1}}, {Polynomial{1}, -xk, Polynomial{-1}}};
}

RationalGF<Polynomial> fib_gf() {
    return {{Polynomial{1}}, {Polynomial{1}, Polynomial{0, -1}, Polynomial{-1}}};
}

RationalGF<Polynomial> hseq_gf() {
    return {{Polynomial{2}, Polynomial{-1}}, {Polynomial{1}, Polynomial{-1}, Polynomial{0, -1}}};
}

RationalGF<Polynomial> lucas_gf() {
    return {{Polynomial{2}, Polynomial{0, -1}}, {Polynomial{1}, Polynomial{0, -1}, Polynomial{-1}}};
}

RationalGF<BiPolynomial> bfp1_gf() {
    const BiPolynomial x = BiPolynomial::x(), y = BiPolynomial::y();
    return {{x, y - x * x}, {BiPolynomial::constant(1), -x, -y}};
}

RationalGF<BiPolynomial> bfp2_gf() {
    const BiPolynomial x = BiPolynomial::x(), y = BiPolynomial::y();
    return {{y, x - x * y}, {BiPolynomial::constant(1), -x, -y}};
}

AnyGF family_gf(const FamilyId& id) {
    switch (id.tag) {
        case Family::F: return fib_gf();
        case Family::G: return gee_gf(id.k);
        case Family::HSEQ: return hseq_gf();
        case Family::LUCAS: return lucas_gf();
        case Family::BFP1: return bfp1_gf();
        case Family::BFP2: return bfp2_gf();
        case Family::H: break;
    }
    throw UnknownFamily("no generating function for family '" + std::string(family_name(id.tag)) + "'");
}

GfReport gf_check(const FamilyId& family, unsigned order) {
    GfReport report{family, order, true, std::nullopt};
    AnyGF gf = family_gf(family);
    std::visit(
        [&](const auto& g) {
            auto series = series_expand(g, order);
            for (unsigned n = 0; n <= order; ++n) {
                bool same;
                if constexpr (std::is_same_v<std::decay_t<decltype(g)>, RationalGF<Polynomial>>) {
                    same = series.coeffs[n] == univariate_member(family, n);
                } else {
                    same = series.coeffs[n] == bivariate_member(family.tag, n);
                }
                if (!same) {
                    report.passed = false;
                    report.first_mismatch = n;
                    return;
                }
            }
        },
        gf);
    return report;
}

}  // namespace fibroots
