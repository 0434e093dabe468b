#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dioph {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// One prime-power entry of a factorization.
struct PrimePower {
    u64 prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of a positive integer into prime powers, primes strictly
/// increasing. value 1 has an empty factor list.
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;

    int exponent_of(u64 p) const;
    int omega() const { return static_cast<int>(factors.size()); }
    bool is_prime_power() const { return factors.size() == 1; }
};

/// p^(v_p(n)+1): the smallest power of p that does not divide n.
struct CriticalPower {
    u64 prime = 0;
    int valuation = 0;  // v_p(n)
    int successor = 1;  // v_p(n) + 1
    u64 power = 0;      // prime^successor
};

/// Smallest-prime-factor sieve, immutable after construction and safe for
/// concurrent reads.
class SpfSieve {
public:
    explicit SpfSieve(u32 limit);

    u32 limit() const { return limit_; }
    bool is_prime(u64 n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }
    u32 spf(u64 n) const;  // smallest prime factor, 2 <= n <= limit
    const std::vector<u32>& primes() const { return primes_; }

private:
    u32 limit_;
    std::vector<u32> spf_;
    std::vector<u32> primes_;
};

/// floor(sqrt(n)) by integer Newton iteration; never touches floating point.
u64 isqrt(u64 n);

bool is_prime(u64 n);

/// Unique factorization of n >= 1. Rejects 0. Backed by a shared
/// smallest-prime-factor sieve for small inputs, trial division above.
Factorization factorize(u64 n);

/// Largest t with p^t | n. Rejects non-prime p.
int padic_valuation(u64 p, u64 n);

CriticalPower critical_power(u64 p, u64 n);

/// a / gcd(a, n) for a label 1 <= a <= n.
u64 reduced_label(u64 a, u64 n);

/// floor(n/a): how many multiples of a lie in [1, n].
u64 multiples_count(u64 a, u64 n);

/// Smallest j >= floor(sqrt(n)) with n/(j+1) < floor(sqrt(n)) <= n/j and
/// n/j - n/(j+1) < 1. Existence is guaranteed for every n >= 1; the scan
/// asserts it. All comparisons are cross-multiplied integer arithmetic.
u64 find_sqrt_bracket(u64 n);

std::vector<u64> primes_upto(u64 n);
u64 prime_pi(u64 n);

}  // namespace dioph
