#include "gw/gpoly.hpp"

#include <numeric>

#include "gw/primes.hpp"

namespace gw {

const ModGaussian& UPolyMod::coeff(std::size_t j) const {
    if (j >= coeffs.size()) throw Error("coefficient index beyond degree");
    return coeffs[j];
}

ModGaussian UPolyMod::eval(const ModGaussian& x) const {
    ModGaussian acc(modulus);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string UPolyMod::str_signed() const {
    std::string out;
    for (long j = degree(); j >= 0; --j) {
        const ModGaussian& c = coeffs[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        GaussianInt lifted = c.lift_signed();
        std::string term;
        if (j == 0) {
            term = (lifted.im == 0) ? lifted.re.get_str() : "(" + lifted.str() + ")";
        } else {
            std::string xpow = (j == 1) ? "x" : "x^" + std::to_string(j);
            if (lifted.im == 0) {
                if (lifted.re == 1) {
                    term = xpow;
                } else if (lifted.re == -1) {
                    term = "-" + xpow;
                } else {
                    term = lifted.re.get_str() + xpow;
                }
            } else {
                term = "(" + lifted.str() + ")" + xpow;
            }
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

UPolyMod gpoly_mod_p(long p, long limit) {
    if (!is_prime(p) || p < 3) throw InvalidBase("g_p requires an odd prime");
    if (p > limit) {
        throw LimitExceeded("p = " + std::to_string(p) + " exceeds the g_p limit " +
                            std::to_string(limit) + " (degree grows as p^2)");
    }
    // Dense int64 coefficient arrays; all values stay below p^2 + p < 2^32.
    std::vector<long> re{1}, im{0};
    re.reserve(static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(p - 1) + 1);
    im.reserve(re.capacity());
    for (long n = 1; n < p; ++n) {
        for (long m = 1; m < p; ++m) {
            if ((n * n + m * m) % p == 0) continue;
            // multiply by (x - (n+mi))
            std::size_t d = re.size();
            re.push_back(0);
            im.push_back(0);
            for (std::size_t j = d; j >= 1; --j) {
                long tr = (re[j - 1] - (re[j] * n - im[j] * m)) % p;
                long ti = (im[j - 1] - (re[j] * m + im[j] * n)) % p;
                re[j] = tr < 0 ? tr + p : tr;
                im[j] = ti < 0 ? ti + p : ti;
            }
            long tr = -(re[0] * n - im[0] * m) % p;
            long ti = -(re[0] * m + im[0] * n) % p;
            re[0] = tr < 0 ? tr + p : tr;
            im[0] = ti < 0 ? ti + p : ti;
        }
    }
    UPolyMod out;
    out.modulus = make_modulus(p, 1);
    out.coeffs.reserve(re.size());
    for (std::size_t j = 0; j < re.size(); ++j) {
        out.coeffs.emplace_back(out.modulus, re[j], im[j]);
    }
    return out;
}

GPolyPattern gpoly_pattern_check(long p, long limit) {
    UPolyMod g = gpoly_mod_p(p, limit);
    GPolyPattern rep;
    rep.p = p;
    rep.degree = g.degree();
    rep.included_pairs = rep.degree; // one linear factor per included pair
    rep.inert_class = (p % 4 == 3);
    for (long j = 0; j <= g.degree(); ++j) {
        const ModGaussian& c = g.coeffs[static_cast<std::size_t>(j)];
        if (!c.is_zero()) rep.support.emplace_back(j, c.lift_signed());
    }
    if (rep.inert_class) {
        // exact match with 1 + x^(2(p-1)) + ... + x^((p-1)^2)
        rep.holds = true;
        const long step = 2 * (p - 1);
        const long top = (p - 1) * (p - 1);
        std::size_t idx = 0;
        for (long e = 0; e <= top; e += step, ++idx) {
            if (idx >= rep.support.size() || rep.support[idx].first != e ||
                !(rep.support[idx].second == GaussianInt(1, 0))) {
                rep.holds = false;
                break;
            }
        }
        if (rep.support.size() != static_cast<std::size_t>(top / step + 1)) rep.holds = false;
        rep.degree_matches_squared_claim = (rep.degree == top);
    } else {
        const long step = p - 1;
        const long top = (p - 1) * (p - 3);
        rep.holds = (rep.degree == top);
        for (const auto& [e, c] : rep.support) {
            if (e % step != 0) rep.holds = false;
        }
        if (rep.support.empty() || rep.support.front().first != 0 ||
            !(rep.support.front().second == GaussianInt(1, 0))) {
            rep.holds = false;
        }
        rep.degree_matches_squared_claim = (rep.degree == (p - 1) * (p - 1));
    }
    return rep;
}

std::vector<ModGaussian> gpoly_low_coeffs(long p, int count, int M) {
    if (!is_prime(p) || p < 3) throw InvalidBase("g_p requires an odd prime");
    if (count < 1 || M < 1) throw Error("count and M must be >= 1");
    ModulusPtr mod = make_modulus(p, M);
    const mpz_srcptr N = mod->modulus.get_mpz_t();
    const std::size_t cnt = static_cast<std::size_t>(count);

    // Truncated series product of (x - z); only `count` low coefficients kept.
    std::vector<Int> re(cnt, Int(0)), im(cnt, Int(0));
    re[0] = 1;
    Int t1, t2;
    for (long n = 1; n < p; ++n) {
        for (long m = 1; m < p; ++m) {
            if ((n * n + m * m) % p == 0) continue;
            for (std::size_t j = cnt; j-- > 0;) {
                // new c[j] = c[j-1] - (n+mi) * c[j]
                mpz_mul_si(t1.get_mpz_t(), re[j].get_mpz_t(), n);
                mpz_submul_ui(t1.get_mpz_t(), im[j].get_mpz_t(), static_cast<unsigned long>(m));
                mpz_mul_si(t2.get_mpz_t(), re[j].get_mpz_t(), m);
                mpz_addmul_ui(t2.get_mpz_t(), im[j].get_mpz_t(), static_cast<unsigned long>(n));
                if (j > 0) {
                    mpz_sub(t1.get_mpz_t(), re[j - 1].get_mpz_t(), t1.get_mpz_t());
                    mpz_sub(t2.get_mpz_t(), im[j - 1].get_mpz_t(), t2.get_mpz_t());
                } else {
                    mpz_neg(t1.get_mpz_t(), t1.get_mpz_t());
                    mpz_neg(t2.get_mpz_t(), t2.get_mpz_t());
                }
                mpz_mod(re[j].get_mpz_t(), t1.get_mpz_t(), N);
                mpz_mod(im[j].get_mpz_t(), t2.get_mpz_t(), N);
            }
        }
    }
    std::vector<ModGaussian> out;
    out.reserve(cnt);
    for (std::size_t j = 0; j < cnt; ++j) out.emplace_back(mod, re[j], im[j]);
    return out;
}

bool gpoly_low_check(long p) {
    std::vector<ModGaussian> coeffs = gpoly_low_coeffs(p, 5, 5);
    for (int k = 1; k <= 4; ++k) {
        ResidueValuation rv = coeffs[static_cast<std::size_t>(k)].residue_valuation();
        if (rv.value < 5 - k) return false;
    }
    return true;
}

GaussianRational gauss_binom(const GaussBinomSpec& spec) {
    if (spec.C < 1 || spec.D < 1 || spec.A < spec.C || spec.B < spec.D) {
        throw MalformedSpec("gaussian binomial requires A >= C >= 1 and B >= D >= 1");
    }
    GaussianInt num(1, 0);
    for (long n = 0; n < spec.C; ++n) {
        for (long m = 0; m < spec.D; ++m) {
            num = num * GaussianInt(spec.A - n, spec.B - m);
        }
    }
    GaussianInt den(1, 0);
    for (long n = 1; n <= spec.C; ++n) {
        for (long m = 1; m <= spec.D; ++m) {
            den = den * GaussianInt(n, m);
        }
    }
    return GaussianRational::quotient(num, den);
}

bool shifted_product_check(long p, long A, long B) {
    if (!is_prime(p) || p < 3) throw InvalidBase("shifted-product check requires an odd prime");
    ModulusPtr mod = make_modulus(p, 5);
    ModGaussian lhs = ModGaussian::one(mod);
    ModGaussian rhs = ModGaussian::one(mod);
    for (long n = 1; n < p; ++n) {
        for (long m = 1; m < p; ++m) {
            if ((n * n + m * m) % p == 0) continue;
            lhs *= ModGaussian(mod, p * A - n, p * B - m);
            rhs *= ModGaussian(mod, n, m);
        }
    }
    return lhs == rhs;
}

bool binomial_congruence_check(long p, long A, long B) {
    if (!is_prime(p) || p % 4 != 3 || p <= 3) {
        throw InvalidBase("binomial congruence check requires a prime p = 3 mod 4, p > 3");
    }
    if (A < 1 || B < 1) throw MalformedSpec("A, B must be >= 1");
    GaussianRational q = gauss_binom({p * A - 1, p * B - 1, p - 1, p - 1});
    if (mpz_divisible_ui_p(q.den.get_mpz_t(), static_cast<unsigned long>(p))) {
        throw NotPIntegral("binomial denominator divisible by " + std::to_string(p));
    }
    GaussianRational diff = q - GaussianRational::from_int(GaussianInt(1, 0));
    Valuation v = valuation_rat(diff, Int(p));
    return v.at_least(5);
}

LucasReport lucas_check(long p, long A, long B, long C, long D) {
    if (!is_prime(p)) throw InvalidBase("lucas check requires a prime");
    LucasReport rep;
    rep.p = p;
    rep.lhs = gauss_binom({p * A, p * B, p * C, p * D});
    rep.rhs = gauss_binom({A, B, C, D});
    rep.lhs_integral = !mpz_divisible_ui_p(rep.lhs.den.get_mpz_t(), static_cast<unsigned long>(p));
    rep.rhs_integral = !mpz_divisible_ui_p(rep.rhs.den.get_mpz_t(), static_cast<unsigned long>(p));
    GaussianRational diff = rep.lhs - rep.rhs;
    rep.difference_zero = diff.is_zero();
    if (rep.difference_zero) {
        rep.holds_mod_p3 = true;
    } else if (rep.lhs_integral && rep.rhs_integral) {
        Valuation v = valuation_rat(diff, Int(p));
        rep.difference_valuation = v.value;
        rep.holds_mod_p3 = v.at_least(3);
    }
    return rep;
}

} // namespace gw
