#include "gw/sympoly.hpp"

#include <vector>

namespace gw {

MPoly MPoly::constant(GaussianInt c) {
    MPoly r;
    r.add_term(Monomial{}, c);
    return r;
}

MPoly MPoly::var_m() {
    MPoly r;
    r.add_term(Monomial{1, 0, 0}, GaussianInt(1, 0));
    return r;
}

MPoly MPoly::var_n() {
    MPoly r;
    r.add_term(Monomial{0, 1, 0}, GaussianInt(1, 0));
    return r;
}

MPoly MPoly::var_p() {
    MPoly r;
    r.add_term(Monomial{0, 0, 1}, GaussianInt(1, 0));
    return r;
}

GaussianInt MPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? GaussianInt() : it->second;
}

void MPoly::add_term(const Monomial& mono, const GaussianInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial mono{ma.deg_m + mb.deg_m, ma.deg_n + mb.deg_n, ma.deg_p + mb.deg_p};
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result = MPoly::constant(GaussianInt(1, 0));
    for (unsigned j = 0; j < k; ++j) result = result * *this;
    return result;
}

GaussianInt MPoly::eval(const Int& m0, const Int& n0, const Int& p0) const {
    // largest exponent per variable, for power tables
    unsigned dm = 0, dn = 0, dp = 0;
    for (const auto& [mono, c] : terms_) {
        dm = std::max(dm, mono.deg_m);
        dn = std::max(dn, mono.deg_n);
        dp = std::max(dp, mono.deg_p);
    }
    auto powers = [](const Int& x, unsigned top) {
        std::vector<Int> v(top + 1);
        v[0] = 1;
        for (unsigned j = 1; j <= top; ++j) v[j] = v[j - 1] * x;
        return v;
    };
    std::vector<Int> pm = powers(m0, dm), pn = powers(n0, dn), pp = powers(p0, dp);
    GaussianInt acc;
    for (const auto& [mono, c] : terms_) {
        Int scale = pm[mono.deg_m] * pn[mono.deg_n] * pp[mono.deg_p];
        acc = acc + GaussianInt(c.re * scale, c.im * scale);
    }
    return acc;
}

namespace {

std::string monomial_str(const Monomial& mono) {
    std::string s;
    auto var = [&s](const char* name, unsigned d) {
        if (d == 0) return;
        s += name;
        if (d > 1) s += "^" + std::to_string(d);
    };
    var("m", mono.deg_m);
    var("n", mono.deg_n);
    var("p", mono.deg_p);
    return s;
}

} // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, c] = *it;
        std::string mstr = monomial_str(mono);
        std::string term;
        if (mstr.empty()) {
            term = (c.im == 0) ? c.re.get_str() : "(" + c.str() + ")";
        } else if (c.im == 0) {
            if (c.re == 1) {
                term = mstr;
            } else if (c.re == -1) {
                term = "-" + mstr;
            } else {
                term = c.re.get_str() + mstr;
            }
        } else {
            term = "(" + c.str() + ")" + mstr;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

MPoly truncate_pdeg(const MPoly& poly, TruncateMode mode, unsigned d) {
    MPoly out;
    for (const auto& [mono, c] : poly.terms()) {
        bool keep = (mode == TruncateMode::Equal) ? (mono.deg_p == d) : (mono.deg_p <= d);
        if (keep) out.add_term(mono, c);
    }
    return out;
}

unsigned min_pdeg(const MPoly& poly) {
    if (poly.is_zero()) throw EmptyPolynomial();
    unsigned best = ~0u;
    for (const auto& [mono, c] : poly.terms()) best = std::min(best, mono.deg_p);
    return best;
}

std::array<MPoly, 8> tuple_forms() {
    const GaussianInt one(1, 0), iu(0, 1);
    auto form = [&](bool flip_re, bool flip_im, bool swapped) {
        // base pair is (n, m); swapped uses (m, n); flips replace x by p - x
        MPoly f;
        Monomial re_var = swapped ? Monomial{1, 0, 0} : Monomial{0, 1, 0};
        Monomial im_var = swapped ? Monomial{0, 1, 0} : Monomial{1, 0, 0};
        if (flip_re) {
            f.add_term(Monomial{0, 0, 1}, one);
            f.add_term(re_var, -one);
        } else {
            f.add_term(re_var, one);
        }
        if (flip_im) {
            f.add_term(Monomial{0, 0, 1}, iu);
            f.add_term(im_var, -iu);
        } else {
            f.add_term(im_var, iu);
        }
        return f;
    };
    return {
        form(false, false, false), // n + im
        form(true, false, false),  // (p-n) + im
        form(false, true, false),  // n + i(p-m)
        form(true, true, false),   // (p-n) + i(p-m)
        form(false, false, true),  // m + in
        form(true, false, true),   // (p-m) + in
        form(false, true, true),   // m + i(p-n)
        form(true, true, true),    // (p-m) + i(p-n)
    };
}

TupleExpansion expand_tuple(int k, int limit) {
    if (k < 1) throw LimitExceeded("tuple power must be >= 1");
    if (k > limit) {
        throw LimitExceeded("tuple power " + std::to_string(k) + " exceeds limit " +
                            std::to_string(limit));
    }
    TupleExpansion out;
    out.k = k;
    out.linear_forms = tuple_forms();

    std::array<MPoly, 8> powered;
    for (int j = 0; j < 8; ++j) powered[j] = out.linear_forms[j].pow(static_cast<unsigned>(k));

    // prefix[j] = product of powered[0..j), suffix[j] = product of powered[j..8)
    std::array<MPoly, 9> prefix, suffix;
    prefix[0] = MPoly::constant(GaussianInt(1, 0));
    for (int j = 0; j < 8; ++j) prefix[j + 1] = prefix[j] * powered[j];
    suffix[8] = MPoly::constant(GaussianInt(1, 0));
    for (int j = 7; j >= 0; --j) suffix[j] = powered[j] * suffix[j + 1];

    out.denominator = prefix[8];
    for (int j = 0; j < 8; ++j) out.numerator += prefix[j] * suffix[j + 1];
    return out;
}

namespace {

// Small builders for the claimed factors.
MPoly poly_m2_plus_n2() {
    MPoly f;
    f.add_term(Monomial{2, 0, 0}, GaussianInt(1, 0));
    f.add_term(Monomial{0, 2, 0}, GaussianInt(1, 0));
    return f;
}

// m^2 + s*2mn - n^2 for s = -1, +1
MPoly poly_quadratic(int s) {
    MPoly f;
    f.add_term(Monomial{2, 0, 0}, GaussianInt(1, 0));
    f.add_term(Monomial{1, 1, 0}, GaussianInt(2 * s, 0));
    f.add_term(Monomial{0, 2, 0}, GaussianInt(-1, 0));
    return f;
}

// m^4 + s*4m^3n - 6m^2n^2 - s*4mn^3 + n^4 for s = -1, +1
MPoly poly_quartic(int s) {
    MPoly f;
    f.add_term(Monomial{4, 0, 0}, GaussianInt(1, 0));
    f.add_term(Monomial{3, 1, 0}, GaussianInt(4 * s, 0));
    f.add_term(Monomial{2, 2, 0}, GaussianInt(-6, 0));
    f.add_term(Monomial{1, 3, 0}, GaussianInt(-4 * s, 0));
    f.add_term(Monomial{0, 4, 0}, GaussianInt(1, 0));
    return f;
}

// m^4 - 6m^2n^2 + n^4
MPoly poly_m4_6m2n2_n4() {
    MPoly f;
    f.add_term(Monomial{4, 0, 0}, GaussianInt(1, 0));
    f.add_term(Monomial{2, 2, 0}, GaussianInt(-6, 0));
    f.add_term(Monomial{0, 4, 0}, GaussianInt(1, 0));
    return f;
}

MPoly p_power(unsigned d) {
    MPoly f;
    f.add_term(Monomial{0, 0, d}, GaussianInt(1, 0));
    return f;
}

} // namespace

bool verify_factored_form(int k) {
    if (k < 1 || k > 5) return false;
    TupleExpansion t = expand_tuple(k);

    MPoly den_slice = truncate_pdeg(t.denominator, TruncateMode::Equal, 0);
    MPoly num_slice = truncate_pdeg(t.numerator, TruncateMode::Equal, min_pdeg(t.numerator));

    MPoly claimed_den = poly_m2_plus_n2().pow(static_cast<unsigned>(4 * k));
    MPoly claimed_num;
    switch (k) {
        case 1:
            claimed_num = MPoly::constant(GaussianInt(2, -2)) * p_power(3) * poly_m4_6m2n2_n4();
            break;
        case 2:
            claimed_num = MPoly::constant(GaussianInt(0, 12)) * p_power(2) *
                          poly_m2_plus_n2().pow(4) * poly_quadratic(-1) * poly_quadratic(+1);
            break;
        case 3:
            claimed_num = MPoly::constant(GaussianInt(-12, -12)) * p_power(1) *
                          poly_m2_plus_n2().pow(8) * poly_quadratic(-1) * poly_quadratic(+1);
            break;
        case 4:
            claimed_num = MPoly::constant(GaussianInt(8, 0)) * poly_m2_plus_n2().pow(12) *
                          poly_quadratic(-1) * poly_quadratic(+1);
            break;
        case 5:
            // -70(i-1) = 70 - 70i; the (m^2+n^2)^12 cofactor matches the
            // degree gap between the displayed ratio and the full expansion.
            claimed_num = MPoly::constant(GaussianInt(70, -70)) * p_power(3) *
                          poly_quartic(-1) * poly_quartic(+1) * poly_m2_plus_n2().pow(12);
            break;
    }
    return num_slice == claimed_num && den_slice == claimed_den;
}

} // namespace gw
