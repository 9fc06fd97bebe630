#pragma once

/**
 * @file arith.hpp
 * @brief Elementary number theory: Moebius function, divisors, small primes.
 */

#include <cstdint>
#include <vector>

#include "synczeta/errors.hpp"

namespace synczeta {

/// Moebius function: 1 at n=1, (-1)^k for k distinct prime factors, 0 if not squarefree.
inline int mobius(std::uint64_t n) {
    if (n == 0) throw Error("mobius(0) is undefined");
    int k = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++k;
        }
    }
    if (n > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= n; m += p) sieve[m] = false;
    }
    return out;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u64(a, b) * b;
}

}  // namespace synczeta
