#pragma once

#include <array>
#include <map>
#include <string>

#include "gw/gint.hpp"

namespace gw {

/// Exponent triple for a monomial m^a n^b p^c.
struct Monomial {
    unsigned deg_m = 0;
    unsigned deg_n = 0;
    unsigned deg_p = 0;

    auto operator<=>(const Monomial&) const = default;
};

/// Sparse polynomial in (m, n, p) with Gaussian-integer coefficients.
/// No stored coefficient is zero; term order is lexicographic by exponents.
class MPoly {
public:
    MPoly() = default;

    static MPoly constant(GaussianInt c);
    static MPoly var_m();
    static MPoly var_n();
    static MPoly var_p();

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, GaussianInt>& terms() const { return terms_; }

    /// Coefficient of the given monomial (zero when absent).
    GaussianInt coeff(const Monomial& mono) const;

    /// Merge in c * m^a n^b p^c, dropping the term if it cancels to zero.
    void add_term(const Monomial& mono, const GaussianInt& c);

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly pow(unsigned k) const;

    GaussianInt eval(const Int& m0, const Int& n0, const Int& p0) const;

    /// Canonical text: terms sorted by (deg_m, deg_n, deg_p) descending,
    /// coefficients as Gaussian integers (parenthesized unless plain
    /// integers), variables m, n, p with caret exponents.
    std::string str() const;

    bool operator==(const MPoly&) const = default;

private:
    std::map<Monomial, GaussianInt> terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);

enum class TruncateMode { Equal, AtMost };

/// Keep exactly the terms whose p-degree is == d (Equal) or <= d (AtMost).
MPoly truncate_pdeg(const MPoly& poly, TruncateMode mode, unsigned d);

/// Minimum p-degree over all terms; throws EmptyPolynomial on the zero poly.
unsigned min_pdeg(const MPoly& poly);

/// The eight degree-1 forms of the conjugate tuple for a pair (n, m):
/// n+im, (p-n)+im, n+i(p-m), (p-n)+i(p-m) and the four with m, n swapped.
std::array<MPoly, 8> tuple_forms();

/// Numerator and denominator of the tuple sum T(m,n,k) = sum_j form_j^-k,
/// expanded exactly over Z[i][m,n,p]:
///   denominator = prod_j form_j^k
///   numerator   = sum_j prod_{l != j} form_l^k
struct TupleExpansion {
    int k = 0;
    std::array<MPoly, 8> linear_forms;
    MPoly numerator;
    MPoly denominator;
};

/// Throws LimitExceeded when k exceeds the limit (default 12).
TupleExpansion expand_tuple(int k, int limit = 12);

/// Checks the factored closed forms of the lowest-p-degree numerator slice
/// and the p-degree-0 denominator slice against the full expansion, k = 1..5.
bool verify_factored_form(int k);

} // namespace gw
