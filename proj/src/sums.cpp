#include "gw/sums.hpp"

#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>

#include "gw/primes.hpp"

namespace gw {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Expected: return "Expected";
        case Classification::Weaker: return "Weaker";
        case Classification::Stronger: return "Stronger";
        case Classification::None: return "None";
    }
    return "?";
}

int expected_exponent(int k) {
    if (k < 1) throw Error("power k must be >= 1");
    return 4 - ((k - 1) % 4);
}

std::vector<ModGaussian> sum_powers(long base, int k_max, int precision) {
    if (base < 2) throw InvalidBase();
    if (base >= (1L << 31)) throw InvalidBase("base too large for the pair loop");
    if (k_max < 1) throw Error("k_max must be >= 1");
    ModulusPtr mod = make_modulus(base, precision);
    const mpz_srcptr N = mod->modulus.get_mpz_t();

    // Raw mpz workspace; the inner loop runs ~base^2 * k_max times.
    std::vector<Int> acc_re(static_cast<std::size_t>(k_max) + 1, Int(0));
    std::vector<Int> acc_im(static_cast<std::size_t>(k_max) + 1, Int(0));
    Int norm, inv, zr, zi, cr, ci, t1, t2;
    const unsigned long ub = static_cast<unsigned long>(base);

    for (unsigned long n = 1; n < ub; ++n) {
        const unsigned long n2 = n * n;
        for (unsigned long m = 1; m < ub; ++m) {
            const unsigned long norm_u = n2 + m * m;
            if (std::gcd(norm_u, ub) != 1) continue;

            mpz_set_ui(norm.get_mpz_t(), norm_u);
            mpz_invert(inv.get_mpz_t(), norm.get_mpz_t(), N);
            // (n + mi)^-1 = (n - mi) / norm
            mpz_mul_ui(zr.get_mpz_t(), inv.get_mpz_t(), n);
            mpz_mod(zr.get_mpz_t(), zr.get_mpz_t(), N);
            mpz_mul_ui(zi.get_mpz_t(), inv.get_mpz_t(), m);
            mpz_neg(zi.get_mpz_t(), zi.get_mpz_t());
            mpz_mod(zi.get_mpz_t(), zi.get_mpz_t(), N);

            mpz_set_ui(cr.get_mpz_t(), 1);
            mpz_set_ui(ci.get_mpz_t(), 0);
            for (int k = 1; k <= k_max; ++k) {
                // (cr, ci) *= (zr, zi)
                mpz_mul(t1.get_mpz_t(), cr.get_mpz_t(), zr.get_mpz_t());
                mpz_submul(t1.get_mpz_t(), ci.get_mpz_t(), zi.get_mpz_t());
                mpz_mul(t2.get_mpz_t(), cr.get_mpz_t(), zi.get_mpz_t());
                mpz_addmul(t2.get_mpz_t(), ci.get_mpz_t(), zr.get_mpz_t());
                mpz_mod(cr.get_mpz_t(), t1.get_mpz_t(), N);
                mpz_mod(ci.get_mpz_t(), t2.get_mpz_t(), N);
                mpz_add(acc_re[k].get_mpz_t(), acc_re[k].get_mpz_t(), cr.get_mpz_t());
                mpz_add(acc_im[k].get_mpz_t(), acc_im[k].get_mpz_t(), ci.get_mpz_t());
            }
        }
    }

    std::vector<ModGaussian> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) out.emplace_back(mod, acc_re[k], acc_im[k]);
    return out;
}

ModGaussian sum_modular(const SumSpec& spec) {
    return sum_powers(spec.base, spec.k, spec.precision).back();
}

long sum_term_count(long base) {
    if (base < 2) throw InvalidBase();
    long count = 0;
    for (long n = 1; n < base; ++n) {
        for (long m = 1; m < base; ++m) {
            if (std::gcd(n * n + m * m, base) == 1) ++count;
        }
    }
    return count;
}

unsigned long oracle_limit() {
    if (const char* env = std::getenv("GW_ORACLE_LIMIT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
    }
    return 50;
}

GaussianRational sum_exact(long base, int k) {
    if (base < 2) throw InvalidBase();
    unsigned long limit = oracle_limit();
    if (static_cast<unsigned long>(base) > limit) {
        throw OracleLimitExceeded("base " + std::to_string(base) +
                                  " exceeds the exact-oracle limit " + std::to_string(limit));
    }
    GaussianRational acc;
    for (long n = 1; n < base; ++n) {
        for (long m = 1; m < base; ++m) {
            if (std::gcd(n * n + m * m, base) != 1) continue;
            acc = acc + reciprocal(GaussianInt(n, m)).pow(static_cast<unsigned long>(k));
        }
    }
    return acc;
}

namespace {

Classification classify_valuation(int observed, int expected) {
    if (observed == 0) return Classification::None;
    if (observed < expected) return Classification::Weaker;
    if (observed == expected) return Classification::Expected;
    return Classification::Stronger;
}

CongruenceRecord make_record(long base, int k, const ModGaussian& sum) {
    CongruenceRecord rec;
    rec.base = base;
    rec.k = k;
    rec.expected = expected_exponent(k);
    ResidueValuation rv = sum.residue_valuation();
    rec.observed = rv.value;
    rec.saturated = rv.saturated;
    rec.classification = classify_valuation(rec.observed, rec.expected);
    return rec;
}

} // namespace

CongruenceRecord classify(long base, int k, int precision) {
    if (precision <= expected_exponent(k)) {
        throw Error("precision must exceed the expected exponent " +
                    std::to_string(expected_exponent(k)));
    }
    return make_record(base, k, sum_modular({base, k, precision}));
}

std::vector<CongruenceRecord> classify_all(long base, int k_max, int precision) {
    std::vector<ModGaussian> sums = sum_powers(base, k_max, precision);
    std::vector<CongruenceRecord> out;
    out.reserve(sums.size());
    for (int k = 1; k <= k_max; ++k) out.push_back(make_record(base, k, sums[k - 1]));
    return out;
}

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

long quartic_fraction_residue(long p) {
    if (p < 3 || !is_prime(p)) throw InvalidBase("quartic fraction sum requires an odd prime");
    const u64 up = static_cast<u64>(p);
    u64 acc = 0;
    for (u64 n = 1; n < up; ++n) {
        for (u64 m = 1; m < up; ++m) {
            u64 norm = (n * n + m * m) % up;
            if (norm == 0) continue;
            // (m^4 - 6 m^2 n^2 + n^4) mod p, kept non-negative
            u64 m2 = (m * m) % up, n2 = (n * n) % up;
            u64 cross = (6 * mulmod64(m2, n2, up)) % up;
            u64 num = (mulmod64(m2, m2, up) + mulmod64(n2, n2, up) + up - cross) % up;
            u64 den_inv = powmod64(powmod64(norm, 4, up), up - 2, up);
            acc = (acc + mulmod64(num, den_inv, up)) % up;
        }
    }
    return static_cast<long>(acc);
}

long power_sum_residue(long p, unsigned long q) {
    if (p < 2 || !is_prime(p)) throw InvalidBase("power sum requires a prime");
    const u64 up = static_cast<u64>(p);
    u64 acc = 0;
    for (u64 n = 1; n < up; ++n) acc = (acc + powmod64(n, q, up)) % up;
    return static_cast<long>(acc);
}

Rational classical_harmonic(long p) {
    if (p < 3) throw InvalidBase("harmonic sum requires p >= 3");
    Rational acc(0);
    for (long k = 1; k < p; ++k) {
        acc += Rational(1, k);
    }
    acc.canonicalize();
    return acc;
}

long wolstenholme_check(long p) {
    Rational h = classical_harmonic(p);
    return int_valuation(Int(h.get_num()), Int(p));
}

Rational bernoulli(unsigned j) {
    static std::vector<Rational> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= j) {
        unsigned jj = static_cast<unsigned>(cache.size());
        // B_jj = -1/(jj+1) * sum_{t<jj} C(jj+1, t) B_t
        Rational acc(0);
        Int binom;
        for (unsigned t = 0; t < jj; ++t) {
            mpz_bin_uiui(binom.get_mpz_t(), jj + 1, t);
            acc += Rational(binom) * cache[t];
        }
        Rational b = -acc / Rational(jj + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[j];
}

long glaisher_check(long p) {
    if (p <= 5 || !is_prime(p)) throw InvalidBase("glaisher check requires a prime > 5");
    Rational b = bernoulli(static_cast<unsigned>(p - 3));
    if (mpz_divisible_ui_p(b.get_den().get_mpz_t(), static_cast<unsigned long>(p))) {
        throw NotPIntegral("B_{p-3} has denominator divisible by " + std::to_string(p));
    }
    Rational combo = classical_harmonic(p) + Rational(Int(p) * Int(p), 3) * b;
    combo.canonicalize();
    Valuation v = valuation_rat(combo, Int(p));
    if (v.infinite) return std::numeric_limits<long>::max();
    return v.value;
}

GaussianInt gauss_power_sum(unsigned long k, long A, long B) {
    if (k < 1 || A < 1 || B < 1) throw Error("gauss_power_sum requires k, A, B >= 1");
    GaussianInt acc;
    for (long a = 1; a <= A; ++a) {
        for (long b = 1; b <= B; ++b) {
            acc = acc + GaussianInt(a, b).pow(k);
        }
    }
    return acc;
}

long leudesdorf_check(long n) {
    if (n < 5) throw BadResidueClass("n must be >= 5");
    long r = n % 6;
    if (r != 1 && r != 5) {
        throw BadResidueClass("n = " + std::to_string(n) + " is not 1 or 5 mod 6");
    }
    Rational acc(0);
    for (long k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        acc += Rational(1, k);
    }
    acc.canonicalize();
    Int base(n);
    long vnum = mpz_divisible_p(acc.get_num().get_mpz_t(), base.get_mpz_t())
                    ? int_valuation(Int(acc.get_num()), base)
                    : 0;
    long vden = mpz_divisible_p(acc.get_den().get_mpz_t(), base.get_mpz_t())
                    ? int_valuation(Int(acc.get_den()), base)
                    : 0;
    return vnum - vden;
}

std::vector<CompositeEntry> composite_scan(long n_max, int k_max, int precision) {
    std::vector<CompositeEntry> out;
    for (long n = 4; n <= n_max; ++n) {
        if (is_prime(n)) continue;
        CompositeEntry entry;
        entry.n = n;
        entry.per_k = classify_all(n, k_max, precision);
        entry.holds_all = true;
        for (const CongruenceRecord& rec : entry.per_k) {
            if (!rec.holds()) entry.holds_all = false;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace gw
