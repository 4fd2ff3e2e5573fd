#pragma once

// Constructors for the Fibonacci-type polynomial families.
//
//   F_n      F_0 = 1, F_1 = x, F_n = x F_{n-1} + F_{n-2}
//   G_n^(k)  G_0 = -1, G_1 = x - 1, G_n = x^k G_{n-1} + G_{n-2}
//   H^(k)    x^k - x^(k-1) + x - 2
//   g_n      g_0 = x, g_1 = y, g_n = x g_{n-1} + y g_{n-2}   (first kind)
//   f_n      f_0 = y, f_1 = x, f_n = x f_{n-1} + y f_{n-2}   (second kind)
//   h_n      h_0 = 2, h_1 = 1, h_n = h_{n-1} + x h_{n-2}
//   L_n      L_0 = 2, L_1 = x, L_n = x L_{n-1} + L_{n-2}
//
// Recurrence constructors memoize per (family, k) in a process-wide cache
// guarded by a mutex; cached values are immutable, so results do not depend
// on call order or on which thread populated the cache.

#include "fibroots/arith.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace fibroots {

enum class Family { F, G, H, BFP1, BFP2, HSEQ, LUCAS };

struct FamilyId {
    Family tag = Family::F;
    unsigned k = 1;  // only meaningful for G and H

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);
bool is_bivariate(Family f);

Polynomial fib(unsigned n);
/// Throws std::invalid_argument for k = 0.
Polynomial gee(unsigned k, unsigned n);
/// Throws std::invalid_argument for k = 0.
Polynomial aitch(unsigned k);

/// sum_j C(n-j, j) x^(n-2j)
Polynomial fib_explicit(unsigned n);

BiPolynomial bfp1(unsigned n);
/// Closed form sum_{k>=1} (2n-3k+1)/(n-k) C(n-k, k-1) x^(n-2k+1) y^k.
/// Requires n >= 1; n = 1 is the 0/0 case and returns y.
BiPolynomial bfp1_explicit(unsigned n);
BiPolynomial bfp2(unsigned n);

/// f_n(1, y) from the factorial-quotient formula with
/// Q(n,k) = n^3 - 3(2k-1)n^2 + (13k(k-1)+2)n - k(k-1)(9k-4),
/// term_k = (n-k-1)! Q(n,k) / (k! (n-2k+2)!) y^k.
///
/// The sum runs over every k with n-k-1 >= 0 and n-2k+2 >= 0. At n = 2 the
/// y^2 term would need (-1)!, so that case returns 1 + y^2 directly.
/// Throws std::logic_error if a term is not an integer. Requires n >= 2.
Polynomial f1y_explicit(unsigned n);

/// Term-by-term values of the f1y sum, before the integrality check.
std::vector<Rational> f1y_terms(unsigned n);

Polynomial hseq(unsigned n);
Polynomial lucas(unsigned n);

/// J_n = f_n(1, 2): 2, 1, 5, 7, 17, 31, ...
Integer jacobsthal_lucas(unsigned n);

/// Univariate member of a family (F, G, H, HSEQ, LUCAS). H ignores n.
Polynomial univariate_member(const FamilyId& id, unsigned n);
/// Bivariate member (BFP1, BFP2).
BiPolynomial bivariate_member(Family f, unsigned n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n or n < 0.
Integer binomial(long n, long k);
Integer factorial(unsigned n);

}  // namespace fibroots
