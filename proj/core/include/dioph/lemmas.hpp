#pragma once

#include <string>
#include <vector>

#include "dioph/numtheory.hpp"

namespace dioph {

/// Result of one exhaustive number-theory sweep. failures is empty when the
/// checked statement held on every enumerated case.
struct LemmaReport {
    std::string name;
    u64 cases_checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Each sweep enumerates every case inside the stated bounds; the checks use
// exact integer arithmetic throughout (cross-multiplied comparisons, never
// rationals or floating point).

/// p | reduced_label(a, n)  <=>  critical_power(p, n).power | a,
/// for all primes p and 1 <= a <= n <= n_max.
LemmaReport check_critical_power_reduced_label(u64 n_max);

/// a | b implies reduced_label(a, n) | reduced_label(b, n),
/// for all a | b <= n <= n_max.
LemmaReport check_reduced_label_divisibility(u64 n_max);

/// floor(n/a) == floor(n/b) with a != b implies a*b > n,
/// for all a, b, n <= n_max.
LemmaReport check_equal_floor_product_bound(u64 n_max);

/// floor(n/a) == floor(n/b) implies floor(n/(ta)) == floor(n/(tb)),
/// for all a, b, t, n <= n_max.
LemmaReport check_floor_equality_scaling(u64 n_max);

/// For a, b <= 4n whose reduced forms are products of exactly two prime
/// powers over four distinct primes, with the critical powers matched
/// pairwise into common floor brackets: at least one of a > n, b > n.
/// Enumerated for n <= n_max (the a, b <= 4n window is a harness bound).
LemmaReport check_two_prime_power_floor_pairing(u64 n_max);

/// find_sqrt_bracket's postcondition re-verified independently for every
/// n <= n_max.
LemmaReport check_sqrt_bracket_postcondition(u64 n_max);

std::vector<LemmaReport> run_all_lemma_suites(u64 n_max);

}  // namespace dioph
