#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dioph/numtheory.hpp"

namespace dioph {

enum class GraphKind { diophantine, prime };

/// The maximal graph on labels 1..order as an adjacency rule, never a stored
/// matrix. diophantine kind joins a, b iff gcd(a, b) | order; prime kind iff
/// gcd(a, b) = 1 (obtained by forcing every valuation of order to zero).
///
/// nonedge_powers holds the critical prime powers q with floor(order/q) >= 2,
/// ascending by power; those are exactly the entries that can produce
/// nonedges (a power with fewer than two multiples in range contributes
/// nothing anywhere).
struct MaximalGraphSpec {
    u64 order = 1;
    GraphKind kind = GraphKind::diophantine;
    Factorization order_factors;
    std::vector<CriticalPower> nonedge_powers;

    int valuation_of(u64 p) const;
    u64 critical_power_of(u64 p) const;
};

/// Builds the spec for D_n (diophantine) or R_n (prime). Formula evaluation
/// is capped at n = 10^7 to keep every intermediate product in 64 bits.
MaximalGraphSpec make_maximal_spec(u64 n, GraphKind kind = GraphKind::diophantine);

/// Adjacency rule. Rejects loops and out-of-range labels.
bool is_adjacent(u64 a, u64 b, const MaximalGraphSpec& spec);

/// For a nonadjacent pair, the smallest prime p whose critical power divides
/// both labels; nullopt iff the pair is adjacent. Any returned p < order/2.
std::optional<u64> nonadjacency_witness(u64 a, u64 b, const MaximalGraphSpec& spec);

/// Closed-form edge count: C(n,2) minus the inclusion-exclusion over subsets
/// of critical prime powers, enumerated depth-first in increasing power order
/// and pruned once the running product exceeds n/2 (every deeper binomial
/// term is zero).
u64 edge_count_formula(const MaximalGraphSpec& spec);

/// O(n^2) pair scan over the adjacency rule. The pair space is partitioned
/// across worker threads for large n; results combine by summation, so the
/// count is deterministic regardless of partitioning.
u64 edge_count_bruteforce(const MaximalGraphSpec& spec);

/// Degree of a label: order-1 when the reduced label is 1, otherwise the
/// alternating floor sum over the distinct primes of the reduced label.
u64 degree_formula(u64 a, const MaximalGraphSpec& spec);

/// Direct count of adjacent partners.
u64 degree_bruteforce(u64 a, const MaximalGraphSpec& spec);

/// Labels of degree order-1, by characterization: the label divides the
/// order, or it is a critical prime power strictly between order/2 and order
/// (for prime kind: label 1, or a prime in (order/2, order]).
std::vector<u64> full_degree_labels(const MaximalGraphSpec& spec);

/// Labels satisfying both branches of the full-degree characterization at
/// once. Provably empty (a critical power never divides the order); surfaced
/// so harness runs can log an anomaly instead of silently asserting.
std::vector<u64> full_degree_overlap_anomalies(const MaximalGraphSpec& spec);

struct DegreeReport {
    u64 order = 0;
    std::vector<u64> degrees;                 // index 1..order; [0] unused
    std::map<u64, std::vector<u64>> classes;  // degree -> sorted labels
    std::vector<u64> full_degree_labels;      // sorted
};

DegreeReport degree_classes(const MaximalGraphSpec& spec);

/// True iff the edge sets of D_n and R_n under the identity labelling
/// coincide, decided by comparing the two predicates on every pair.
/// Equivalent to n being prime.
bool dn_equals_rn(u64 n);

/// prime_pi(n) + prime_pi(n/2) + 1: more full-degree vertices than this rule
/// out a prime labelling.
u64 seoud_youssef_bound(u64 n);

struct IndependenceBound {
    u64 size = 1;
    bool exact = true;
};

/// Independence number of the maximal graph (= maximum clique of its
/// complement, the conflict graph), by branch and bound with a greedy
/// colouring bound. If node_budget is exhausted the best clique found so far
/// is returned with exact = false.
IndependenceBound max_independent_set(const MaximalGraphSpec& spec, u64 node_budget = 1'000'000);

}  // namespace dioph
