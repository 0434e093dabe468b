#include "dioph/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dioph {

namespace {

constexpr size_t kMaxRecordedFailures = 32;

void record(LemmaReport& report, const std::string& what) {
    if (report.failures.size() < kMaxRecordedFailures) report.failures.push_back(what);
}

std::string fmt_case(std::initializer_list<std::pair<const char*, u64>> fields) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : fields) {
        if (!first) os << ' ';
        os << k << '=' << v;
        first = false;
    }
    return os.str();
}

}  // namespace

LemmaReport check_critical_power_reduced_label(u64 n_max) {
    LemmaReport report{"critical_power_reduced_label", 0, {}};
    const auto primes = primes_upto(n_max);
    for (u64 n = 1; n <= n_max; ++n) {
        for (u64 p : primes) {
            if (p > n) break;
            const u64 q = critical_power(p, n).power;
            for (u64 a = 1; a <= n; ++a) {
                ++report.cases_checked;
                const bool divides_reduced = reduced_label(a, n) % p == 0;
                const bool power_divides = a % q == 0;
                if (divides_reduced != power_divides)
                    record(report, fmt_case({{"n", n}, {"p", p}, {"a", a}}));
            }
        }
    }
    return report;
}

LemmaReport check_reduced_label_divisibility(u64 n_max) {
    LemmaReport report{"reduced_label_divisibility", 0, {}};
    for (u64 n = 1; n <= n_max; ++n) {
        for (u64 b = 1; b <= n; ++b) {
            const u64 rb = reduced_label(b, n);
            for (u64 a = 1; a <= b; ++a) {
                if (b % a != 0) continue;
                ++report.cases_checked;
                if (rb % reduced_label(a, n) != 0)
                    record(report, fmt_case({{"n", n}, {"a", a}, {"b", b}}));
            }
        }
    }
    return report;
}

LemmaReport check_equal_floor_product_bound(u64 n_max) {
    LemmaReport report{"equal_floor_product_bound", 0, {}};
    for (u64 n = 1; n <= n_max; ++n) {
        for (u64 a = 1; a <= n_max; ++a) {
            const u64 fa = n / a;
            for (u64 b = a + 1; b <= n_max; ++b) {
                if (fa != n / b) continue;
                ++report.cases_checked;
                if (a * b <= n) record(report, fmt_case({{"n", n}, {"a", a}, {"b", b}}));
            }
        }
    }
    return report;
}

LemmaReport check_floor_equality_scaling(u64 n_max) {
    LemmaReport report{"floor_equality_scaling", 0, {}};
    for (u64 n = 1; n <= n_max; ++n) {
        for (u64 a = 1; a <= n_max; ++a) {
            const u64 fa = n / a;
            for (u64 b = a + 1; b <= n_max; ++b) {
                if (fa != n / b) continue;
                for (u64 t = 1; t <= n_max; ++t) {
                    ++report.cases_checked;
                    const u64 ta = t * a;
                    if (ta > n) break;  // all remaining floors are 0 on both sides
                    if (n / ta != n / (t * b))
                        record(report, fmt_case({{"n", n}, {"a", a}, {"b", b}, {"t", t}}));
                }
            }
        }
    }
    return report;
}

LemmaReport check_two_prime_power_floor_pairing(u64 n_max) {
    LemmaReport report{"two_prime_power_floor_pairing", 0, {}};
    struct Candidate {
        u64 value;
        u64 prime[2];
        u64 floor[2];  // floor(n / critical_power(prime))
    };
    for (u64 n = 1; n <= n_max; ++n) {
        std::vector<Candidate> candidates;
        for (u64 a = 1; a <= 4 * n; ++a) {
            const u64 reduced = a / std::gcd(a, n);
            const auto f = factorize(reduced);
            if (f.omega() != 2) continue;
            Candidate c{a, {f.factors[0].prime, f.factors[1].prime}, {0, 0}};
            bool bracketed = true;
            for (int i = 0; i < 2; ++i) {
                const u64 q = critical_power(c.prime[i], n).power;
                c.floor[i] = n / q;
                if (c.floor[i] == 0) bracketed = false;  // power beyond n: no bracket index
            }
            if (bracketed) candidates.push_back(c);
        }
        for (size_t i = 0; i < candidates.size(); ++i) {
            for (size_t j = i + 1; j < candidates.size(); ++j) {
                const auto& x = candidates[i];
                const auto& y = candidates[j];
                if (x.prime[0] == y.prime[0] || x.prime[0] == y.prime[1] ||
                    x.prime[1] == y.prime[0] || x.prime[1] == y.prime[1])
                    continue;  // the four primes must be distinct
                const bool straight = x.floor[0] == y.floor[0] && x.floor[1] == y.floor[1];
                const bool crossed = x.floor[0] == y.floor[1] && x.floor[1] == y.floor[0];
                if (!straight && !crossed) continue;
                ++report.cases_checked;
                if (x.value <= n && y.value <= n)
                    record(report, fmt_case({{"n", n}, {"a", x.value}, {"b", y.value}}));
            }
        }
    }
    return report;
}

LemmaReport check_sqrt_bracket_postcondition(u64 n_max) {
    LemmaReport report{"sqrt_bracket_postcondition", 0, {}};
    for (u64 n = 1; n <= n_max; ++n) {
        ++report.cases_checked;
        const u64 j = find_sqrt_bracket(n);
        const u64 r = isqrt(n);
        using uw = unsigned __int128;
        const bool in_range = r <= j && j <= n;
        const bool bracket = uw(n) < uw(r) * (j + 1) && uw(r) * j <= uw(n);
        const bool gap = uw(n) < uw(j) * (j + 1);
        if (!(in_range && bracket && gap)) record(report, fmt_case({{"n", n}, {"j", j}}));
    }
    return report;
}

std::vector<LemmaReport> run_all_lemma_suites(u64 n_max) {
    const u64 pair_bound = std::min<u64>(n_max, 300);
    return {
        check_critical_power_reduced_label(pair_bound),
        check_reduced_label_divisibility(pair_bound),
        check_equal_floor_product_bound(pair_bound),
        check_floor_equality_scaling(pair_bound),
        check_two_prime_power_floor_pairing(std::min<u64>(n_max, 150)),
        check_sqrt_bracket_postcondition(1'000'000),
    };
}

}  // namespace dioph
