#include "dioph/graph.hpp"

#include <algorithm>

namespace dioph {

SimpleGraph::SimpleGraph(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("SimpleGraph: order must be positive");
    adj_.resize(static_cast<std::size_t>(order) + 1);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 1 || v > order_) throw std::invalid_argument("SimpleGraph: vertex out of range");
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("SimpleGraph: loops are not allowed");
    if (has_edge(u, v)) throw std::invalid_argument("SimpleGraph: duplicate edge");
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 1; u <= order_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Labelling::Labelling(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) labels_ = {0};
    labels_[0] = 0;
}

int Labelling::label_of(int v) const {
    if (v < 1 || v > order()) throw std::invalid_argument("Labelling: vertex out of range");
    return labels_[v];
}

void Labelling::set(int v, int label) {
    if (v < 1 || v > order()) throw std::invalid_argument("Labelling: vertex out of range");
    labels_[v] = label;
}

Labelling Labelling::identity(int order) {
    std::vector<int> labels(static_cast<std::size_t>(order) + 1);
    for (int v = 1; v <= order; ++v) labels[v] = v;
    return Labelling(std::move(labels));
}

bool Labelling::is_bijective() const {
    const int n = order();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v = 1; v <= n; ++v) {
        const int l = labels_[v];
        if (l < 1 || l > n || seen[l]) return false;
        seen[l] = true;
    }
    return true;
}

}  // namespace dioph
