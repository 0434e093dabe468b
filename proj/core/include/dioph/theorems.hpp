#pragma once

#include <string>

#include "dioph/maximal.hpp"

namespace dioph {

/// Exhaustively checkable statements about degrees and neighbourhoods in
/// maximal diophantine graphs. Each is verified over every label pair of D_n
/// that satisfies its hypotheses, against brute-force degrees.
enum class TheoremId {
    eq_prime_powers,         // prime-power labels: degree equality iff matched floors
    eq_same_prime,           // same-prime specialization
    eq_multiple,             // f(v) = t*f(u), f(v) not a prime power
    eq_omega,                // matched prime counts and floors imply equal degrees
    eq_converse,             // divisor pairs: equal degrees imply equal prime support
    nbhd_nesting,            // divisibility nests neighbourhoods; equal degrees make them equal
    deficient_has_critical,  // every deficient label is divisible by a critical power
    corollary_nonprime,      // evidence rows for prime-power orders
};

constexpr TheoremId kAllTheorems[] = {
    TheoremId::eq_prime_powers,  TheoremId::eq_same_prime, TheoremId::eq_multiple,
    TheoremId::eq_omega,         TheoremId::eq_converse,   TheoremId::nbhd_nesting,
    TheoremId::deficient_has_critical, TheoremId::corollary_nonprime,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);  // throws on unknown id

struct Counterexample {
    u64 a = 0;
    u64 b = 0;
    std::string detail;
};

struct TheoremVerdict {
    TheoremId id;
    u64 n = 0;
    u64 pairs_checked = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> annotations;  // known discrepancies and evidence notes

    bool ok() const { return counterexamples.empty(); }
};

TheoremVerdict verify_theorem(TheoremId id, u64 n);

/// Hypothesis of the omega criterion: both labels deficient, equal counts of
/// distinct primes in the reduced labels, and every prime of one reduced
/// label has a floor-matched prime in the other.
bool eq_omega_hypothesis(u64 a, u64 b, const MaximalGraphSpec& spec);

}  // namespace dioph
