#pragma once

#include <vector>

namespace gw {

inline bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<long> primes_upto(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i * i <= n; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        for (long j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    for (long i = 2; i <= n; ++i) {
        if (sieve[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

} // namespace gw
