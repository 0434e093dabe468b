#include "dioph/labeller.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace dioph {

std::vector<EdgeViolation> verify(const SimpleGraph& graph, const Labelling& labelling,
                                  GraphKind mode) {
    const int n = graph.order();
    if (labelling.order() != n || !labelling.is_bijective())
        throw std::invalid_argument("verify: labelling is not a bijection onto {1..n}");
    std::vector<EdgeViolation> violations;
    for (const auto& [u, v] : graph.edges()) {
        const u64 g = std::gcd<u64>(labelling.label_of(u), labelling.label_of(v));
        const bool ok = mode == GraphKind::diophantine ? static_cast<u64>(n) % g == 0 : g == 1;
        if (!ok) violations.push_back({u, v, g});
    }
    return violations;
}

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Search {
public:
    Search(const SimpleGraph& graph, const SearchConfig& config)
        : graph_(graph), config_(config), n_(graph.order()) {
        const auto spec = make_maximal_spec(static_cast<u64>(n_), config.mode);

        // conflict masks: labels nonadjacent in the maximal graph, built from
        // the critical prime powers that can produce nonedges
        conflicts_.assign(n_ + 1, 0);
        for (const auto& cp : spec.nonedge_powers) {
            u64 group = 0;
            for (u64 m = cp.power; m <= spec.order; m += cp.power) group |= bit(static_cast<int>(m));
            for (u64 m = cp.power; m <= spec.order; m += cp.power)
                conflicts_[m] |= group & ~bit(static_cast<int>(m));
        }

        std::vector<u64> label_degree(n_ + 1);
        for (int l = 1; l <= n_; ++l) label_degree[l] = degree_formula(l, spec);

        // static order: descending graph degree, ties by id (or seeded shuffle)
        position_.resize(n_ + 1);
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (graph_.degree(a) != graph_.degree(b)) return graph_.degree(a) > graph_.degree(b);
            if (config_.seed == 0) return a < b;
            return splitmix64(config_.seed ^ static_cast<u64>(a)) <
                   splitmix64(config_.seed ^ static_cast<u64>(b));
        });
        for (int i = 0; i < n_; ++i) position_[order[i]] = i;

        candidates_.assign(n_ + 1, 0);
        for (int v = 1; v <= n_; ++v)
            for (int l = 1; l <= n_; ++l)
                if (label_degree[l] >= static_cast<u64>(graph_.degree(v))) candidates_[v] |= bit(l);
    }

    SearchResult run() {
        const auto start = std::chrono::steady_clock::now();
        assignment_.assign(n_ + 1, 0);
        deadline_ = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                std::chrono::duration<double>(config_.time_limit_seconds));

        SearchResult result;
        const bool found = dfs(0, candidates_);
        result.stats.decisions = decisions_;
        result.stats.backtracks = backtracks_;
        result.stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (found) {
            result.verdict = Verdict::satisfiable;
            Labelling labelling = Labelling::identity(n_);
            for (int v = 1; v <= n_; ++v) labelling.set(v, assignment_[v]);
            result.labelling = std::move(labelling);
        } else {
            result.verdict = limit_hit_ ? Verdict::limit_exceeded : Verdict::unsatisfiable;
        }
        return result;
    }

private:
    static u64 bit(int label) { return u64{1} << (label - 1); }

    bool out_of_budget() {
        if (decisions_ > config_.node_limit) return true;
        if (decisions_ % 1024 == 0 && std::chrono::steady_clock::now() > deadline_) return true;
        return false;
    }

    bool dfs(int assigned, const std::vector<u64>& cand) {
        if (assigned == n_) return true;

        // minimum remaining candidates, ties by static position
        int best = -1;
        int best_count = n_ + 1;
        for (int v = 1; v <= n_; ++v) {
            if (assignment_[v] != 0) continue;
            const int c = std::popcount(cand[v]);
            if (c < best_count || (c == best_count && position_[v] < position_[best])) {
                best = v;
                best_count = c;
            }
        }

        u64 options = cand[best];
        while (options != 0) {
            const int label = std::countr_zero(options) + 1;
            options &= options - 1;
            ++decisions_;
            if (out_of_budget()) {
                limit_hit_ = true;
                return false;
            }

            assignment_[best] = label;
            std::vector<u64> next = cand;
            next[best] = bit(label);
            bool dead = false;
            for (int v = 1; v <= n_ && !dead; ++v) {
                if (assignment_[v] != 0) continue;
                next[v] &= ~bit(label);
                if (graph_.has_edge(best, v)) next[v] &= ~conflicts_[label];
                dead = next[v] == 0;
            }
            if (!dead && dfs(assigned + 1, next)) return true;
            assignment_[best] = 0;
            if (limit_hit_) return false;
        }
        ++backtracks_;
        return false;
    }

    const SimpleGraph& graph_;
    SearchConfig config_;
    int n_;
    std::vector<u64> conflicts_;   // per label
    std::vector<u64> candidates_;  // initial per-vertex label sets
    std::vector<int> position_;
    std::vector<int> assignment_;
    std::chrono::steady_clock::time_point deadline_;
    u64 decisions_ = 0;
    u64 backtracks_ = 0;
    bool limit_hit_ = false;
};

}  // namespace

SearchResult solve(const SimpleGraph& graph, const SearchConfig& config) {
    if (graph.order() > kSolverVertexCap)
        throw SolverCapError("solve: graph exceeds the 64-vertex solver cap");
    if (config.node_limit == 0 || config.time_limit_seconds <= 0)
        throw std::invalid_argument("solve: limits must be positive");
    return Search(graph, config).run();
}

namespace {

bool decide(const SimpleGraph& graph, GraphKind mode) {
    SearchConfig config;
    config.mode = mode;
    const SearchResult result = solve(graph, config);
    if (result.verdict == Verdict::limit_exceeded)
        throw std::runtime_error("labelling decision hit the search limit");
    return result.verdict == Verdict::satisfiable;
}

}  // namespace

bool is_diophantine(const SimpleGraph& graph) { return decide(graph, GraphKind::diophantine); }

bool is_prime_graph(const SimpleGraph& graph) { return decide(graph, GraphKind::prime); }

}  // namespace dioph
