#pragma once

#include <optional>

#include "dioph/graph.hpp"
#include "dioph/maximal.hpp"

namespace dioph {

struct EdgeViolation {
    int u = 0;
    int v = 0;
    u64 gcd = 0;
};

/// Checks a labelling against the edge rule (gcd divides the order for
/// diophantine mode, gcd 1 for prime mode). Empty result means the labelling
/// is valid. Rejects non-bijective labellings.
std::vector<EdgeViolation> verify(const SimpleGraph& graph, const Labelling& labelling,
                                  GraphKind mode);

struct SearchConfig {
    GraphKind mode = GraphKind::diophantine;
    u64 node_limit = 100'000'000;  // decisions before giving up
    double time_limit_seconds = 60.0;
    u64 seed = 0;  // 0 = canonical tie-break order; otherwise a deterministic shuffle
};

enum class Verdict { satisfiable, unsatisfiable, limit_exceeded };

struct SearchStats {
    u64 decisions = 0;
    u64 backtracks = 0;
    double elapsed_seconds = 0.0;
};

struct SearchResult {
    Verdict verdict = Verdict::limit_exceeded;
    std::optional<Labelling> labelling;  // present iff satisfiable
    SearchStats stats;
};

/// Raised when a graph exceeds the 64-vertex solver cap (candidate sets are
/// machine-word bitmasks).
struct SolverCapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kSolverVertexCap = 64;

/// Backtracking search for a labelling of an arbitrary graph.
///
/// Labels conflict exactly when they are nonadjacent in the maximal graph of
/// the same order (they share a critical prime power). Candidate sets start
/// from the degree filter: a vertex of graph degree d can only take a label
/// whose maximal-graph degree is at least d; full-degree vertices are thereby
/// confined to the full-degree labels. Vertices are ordered by descending
/// graph degree, the next vertex is chosen by minimum remaining candidates,
/// candidate labels are tried in ascending order, and each assignment
/// forward-checks the candidate sets of unassigned neighbours. Fully
/// deterministic for a fixed config.
///
/// unsatisfiable is only ever returned after the pruned-but-complete search
/// space is exhausted; limit_exceeded claims nothing.
SearchResult solve(const SimpleGraph& graph, const SearchConfig& config = {});

bool is_diophantine(const SimpleGraph& graph);
bool is_prime_graph(const SimpleGraph& graph);

}  // namespace dioph
