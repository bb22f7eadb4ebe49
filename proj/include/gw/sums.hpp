#pragma once

#include <string>
#include <vector>

#include "gw/gint.hpp"
#include "gw/modring.hpp"

namespace gw {

/// Parameters of one congruence sum S_base^(k) computed mod base^precision.
struct SumSpec {
    long base = 0;    // prime p or composite n, >= 2
    int k = 1;        // power of the reciprocals
    int precision = 8; // working exponent M
};

enum class Classification { Expected, Weaker, Stronger, None };

const char* to_string(Classification c);

/// One (base, k) verification result.
struct CongruenceRecord {
    long base = 0;
    int k = 0;
    int expected = 0;  // m(k)
    int observed = 0;  // residue valuation, capped at the working precision
    bool saturated = false;
    Classification classification = Classification::None;

    bool holds() const { return observed >= expected; }
    bool operator==(const CongruenceRecord&) const = default;
};

/// 4 - ((k-1) mod 4): the exponent cycle 4,3,2,1 indexed by k mod 4.
int expected_exponent(int k);

/// Sum of (n+mi)^-k over 1 <= n,m <= base-1 with gcd(base, n^2+m^2) = 1,
/// computed in Z[i]/base^precision.
ModGaussian sum_modular(const SumSpec& spec);

/// All powers 1..k_max in one pass (one inverse per pair, incremental powers).
std::vector<ModGaussian> sum_powers(long base, int k_max, int precision);

/// Number of pairs the gcd condition keeps for this base.
long sum_term_count(long base);

/// The same sum with exact Gaussian-rational arithmetic.  Guarded by the
/// oracle limit (default 50, override via the GW_ORACLE_LIMIT env var);
/// throws OracleLimitExceeded beyond it.
GaussianRational sum_exact(long base, int k);

unsigned long oracle_limit();

/// Classify one (base, k): runs the modular sum, extracts the residue
/// valuation and fills the record.  Requires precision > expected_exponent(k).
CongruenceRecord classify(long base, int k, int precision);

/// Classification for all k in 1..k_max sharing one modular pass.
std::vector<CongruenceRecord> classify_all(long base, int k_max, int precision);

/// Sum of (m^4-6m^2n^2+n^4)/(m^2+n^2)^4 over the included pairs, in Z/p.
long quartic_fraction_residue(long p);

/// Sum of n^q over 1 <= n <= p-1, in Z/p.  Zero unless (p-1) | q.
long power_sum_residue(long p, unsigned long q);

/// Exact H_{p-1} = 1 + 1/2 + ... + 1/(p-1).
Rational classical_harmonic(long p);

/// Valuation at p of the numerator of H_{p-1} (>= 2 for primes p >= 5).
long wolstenholme_check(long p);

/// Exact B_j by the recurrence sum_{t=0}^{j} C(j+1,t) B_t = 0, B_0 = 1
/// (so B_1 = -1/2).  Memoized.
Rational bernoulli(unsigned j);

/// Valuation at p of H_{p-1} + (1/3) p^2 B_{p-3} (>= 3 for primes p > 5).
/// Throws NotPIntegral if p divides the denominator of B_{p-3}.
long glaisher_check(long p);

/// W^(k)(A+Bi) = sum of (a+bi)^k over 1 <= a <= A, 1 <= b <= B.
GaussianInt gauss_power_sum(unsigned long k, long A, long B);

/// Valuation at n of the sum of 1/k over units k mod n, for n >= 5 with
/// n = 1 or 5 mod 6 (>= 2 by Leudesdorf).  Throws BadResidueClass otherwise.
long leudesdorf_check(long n);

/// Per-composite outcome of the S_n^(k) scan.
struct CompositeEntry {
    long n = 0;
    bool holds_all = false;
    std::vector<CongruenceRecord> per_k;
};

/// Classify S_n^(k) against n^(4-r) for every composite n <= n_max and
/// k = 1..k_max, at the given working precision.
std::vector<CompositeEntry> composite_scan(long n_max, int k_max, int precision = 4);

} // namespace gw
