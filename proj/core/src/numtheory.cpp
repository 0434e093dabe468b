#include "dioph/numtheory.hpp"

#include <cassert>
#include <numeric>

namespace dioph {

int Factorization::exponent_of(u64 p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

SpfSieve::SpfSieve(u32 limit) : limit_(limit), spf_(static_cast<size_t>(limit) + 1, 0) {
    // linear sieve: each composite is marked once by its smallest prime factor
    for (u32 i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
        }
        for (u32 p : primes_) {
            if (p > spf_[i]) break;
            u64 next = static_cast<u64>(p) * i;
            if (next > limit_) break;
            spf_[next] = p;
        }
    }
}

u32 SpfSieve::spf(u64 n) const {
    if (n < 2 || n > limit_) throw std::invalid_argument("SpfSieve::spf: out of range");
    return spf_[n];
}

namespace {

// shared sieve for factorization and primality of small inputs
const SpfSieve& shared_sieve() {
    static const SpfSieve sieve(1u << 16);
    return sieve;
}

}  // namespace

u64 isqrt(u64 n) {
    if (n < 2) return n;
    u64 x = n;
    u64 y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    assert(x * x <= n && n - x * x <= 2 * x);
    return x;
}

bool is_prime(u64 n) {
    const auto& sieve = shared_sieve();
    if (n <= sieve.limit()) return sieve.is_prime(n);
    for (u64 p : sieve.primes()) {
        if (p * p > n) return true;
        if (n % p == 0) return false;
    }
    // beyond sieve-squared range: continue trial division on odd candidates
    for (u64 d = static_cast<u64>(sieve.limit()) + 1; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization result;
    result.value = n;
    const auto& sieve = shared_sieve();
    u64 m = n;

    if (m <= sieve.limit()) {
        while (m > 1) {
            u64 p = sieve.spf(m);
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            result.factors.push_back({p, e});
        }
        return result;
    }

    for (u64 p : sieve.primes()) {
        if (p * p > m) break;
        if (m % p == 0) {
            int e = 0;
            do {
                m /= p;
                ++e;
            } while (m % p == 0);
            result.factors.push_back({p, e});
        }
    }
    u64 d = static_cast<u64>(sieve.limit()) + 1;
    while (d * d <= m) {
        if (m % d == 0) {
            int e = 0;
            do {
                m /= d;
                ++e;
            } while (m % d == 0);
            result.factors.push_back({d, e});
        }
        d += 2;
    }
    if (m > 1) result.factors.push_back({m, 1});
    return result;
}

int padic_valuation(u64 p, u64 n) {
    if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
    if (n == 0) throw std::invalid_argument("padic_valuation: n must be positive");
    int t = 0;
    while (n % p == 0) {
        n /= p;
        ++t;
    }
    return t;
}

CriticalPower critical_power(u64 p, u64 n) {
    CriticalPower cp;
    cp.prime = p;
    cp.valuation = padic_valuation(p, n);
    cp.successor = cp.valuation + 1;
    u64 power = 1;
    for (int i = 0; i < cp.successor; ++i) {
        if (power > UINT64_MAX / p) throw std::overflow_error("critical_power: overflow");
        power *= p;
    }
    cp.power = power;
    return cp;
}

u64 reduced_label(u64 a, u64 n) {
    if (a < 1 || a > n) throw std::invalid_argument("reduced_label: label out of range");
    return a / std::gcd(a, n);
}

u64 multiples_count(u64 a, u64 n) {
    if (a == 0) throw std::invalid_argument("multiples_count: a must be positive");
    return n / a;
}

u64 find_sqrt_bracket(u64 n) {
    if (n == 0) throw std::invalid_argument("find_sqrt_bracket: n must be positive");
    const u64 r = isqrt(n);
    for (u64 j = r; j <= n; ++j) {
        using uw = unsigned __int128;
        // n/(j+1) < r  <=>  n < r(j+1);  r <= n/j  <=>  rj <= n;
        // n/j - n/(j+1) < 1  <=>  n < j(j+1)
        if (uw(n) < uw(r) * (j + 1) && uw(r) * j <= uw(n) && uw(n) < uw(j) * (j + 1)) return j;
    }
    assert(false && "bracket index exists for every positive n");
    throw std::logic_error("find_sqrt_bracket: no qualifying index");
}

std::vector<u64> primes_upto(u64 n) {
    std::vector<u64> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

u64 prime_pi(u64 n) {
    if (n < 2) return 0;
    std::vector<bool> composite(n + 1, false);
    u64 count = 0;
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        ++count;
        for (u64 j = i * i; j <= n; j += i) composite[j] = true;
    }
    return count;
}

}  // namespace dioph
