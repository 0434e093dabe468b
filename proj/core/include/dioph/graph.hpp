#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace dioph {

/// Finite simple undirected graph on vertices 1..order().
class SimpleGraph {
public:
    explicit SimpleGraph(int order);

    int order() const { return order_; }
    std::size_t edge_count() const { return edge_count_; }

    /// Inserts an undirected edge. Rejects loops, out-of-range endpoints and
    /// duplicates.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    void check_vertex(int v) const;

    int order_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;  // index 0 unused; neighbor lists sorted
};

/// Bijection from vertices 1..n onto labels {1..n}.
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(std::vector<int> labels);  // labels[0] ignored, 1-indexed

    int order() const { return static_cast<int>(labels_.size()) - 1; }
    int label_of(int v) const;
    void set(int v, int label);

    static Labelling identity(int order);
    bool is_bijective() const;

private:
    std::vector<int> labels_{0};
};

}  // namespace dioph
