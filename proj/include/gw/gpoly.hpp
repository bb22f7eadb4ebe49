#pragma once

#include <string>
#include <vector>

#include "gw/gint.hpp"
#include "gw/modring.hpp"

namespace gw {

/// Univariate polynomial over Z[i]/b^M, dense, index = degree in x.
struct UPolyMod {
    ModulusPtr modulus;
    std::vector<ModGaussian> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    /// Coefficient of x^j (zero beyond the stored degree).
    const ModGaussian& coeff(std::size_t j) const;

    ModGaussian eval(const ModGaussian& x) const;

    /// Descending powers of x; coefficients rendered as symmetric residues
    /// in (-N/2, N/2].
    std::string str_signed() const;
};

/// g_p(x) = prod (x - (n+mi)) over the included pairs, coefficients in Z[i]/p.
/// Degree is (p-1)^2 for p = 3 mod 4 and (p-1)(p-3) for p = 1 mod 4.
/// Throws LimitExceeded for p beyond the limit.
UPolyMod gpoly_mod_p(long p, long limit = 100);

/// Support pattern of g_p mod p.
struct GPolyPattern {
    long p = 0;
    long degree = 0;
    long included_pairs = 0;
    bool inert_class = false; // p = 3 mod 4
    bool holds = false;
    // (exponent, signed coefficient) for the nonzero terms, ascending exponent
    std::vector<std::pair<long, GaussianInt>> support;
    // p = 1 mod 4: the nominal (p-1)^2 degree overcounts because the
    // excluded pairs drop linear factors; surfaced here rather than asserted.
    bool degree_matches_squared_claim = false;
};

/// For p = 3 mod 4: exact equality with 1 + x^(2(p-1)) + ... + x^((p-1)^2).
/// For p = 1 mod 4: support only at multiples of (p-1), top term
/// x^((p-1)(p-3)), constant term 1; emits the coefficient list.
GPolyPattern gpoly_pattern_check(long p, long limit = 100);

/// First `count` low-order coefficients [a_r, a_{r-1}, ..., a_{r-count+1}]
/// of g_p, computed as a truncated power series over Z[i]/p^M.
std::vector<ModGaussian> gpoly_low_coeffs(long p, int count, int M);

/// a_{r-k} = 0 mod p^(5-k) for k = 1..4, at count = 5, M = 5.
bool gpoly_low_check(long p);

/// Gaussian binomial parameters; requires A >= C >= 1 and B >= D >= 1.
struct GaussBinomSpec {
    long A = 1, B = 1, C = 1, D = 1;
};

/// Ratio of the shifted-grid product over the base-grid product; a Gaussian
/// rational, not integral in general.  Throws MalformedSpec on bad ranges.
GaussianRational gauss_binom(const GaussBinomSpec& spec);

/// prod (pA + ipB - (n+mi)) = prod (n+mi) mod p^5 over the included pairs.
bool shifted_product_check(long p, long A, long B);

/// [pA-1 + (pB-1)i over (p-1) + (p-1)i] = 1 mod p^5 for p = 3 mod 4.
/// Throws NotPIntegral when the reduced denominator is divisible by p.
bool binomial_congruence_check(long p, long A, long B);

/// Lucas-type comparison of [pA+pBi over pC+pDi] and [A+Bi over C+Di] mod p^3.
/// All outcomes are data; nothing is asserted.
struct LucasReport {
    long p = 0;
    bool lhs_integral = false; // reduced denominator coprime to p
    bool rhs_integral = false;
    bool difference_zero = false;
    long difference_valuation = 0; // meaningful when both integral and diff != 0
    bool holds_mod_p3 = false;
    GaussianRational lhs;
    GaussianRational rhs;
};

LucasReport lucas_check(long p, long A, long B, long C, long D);

} // namespace gw
