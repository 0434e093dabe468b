#include "dioph/maximal.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <thread>

namespace dioph {

namespace {

constexpr u64 kFormulaOrderCap = 10'000'000;

u64 choose2(u64 m) { return m < 2 ? 0 : m * (m - 1) / 2; }

bool adjacent_unchecked(u64 a, u64 b, const MaximalGraphSpec& spec) {
    const u64 g = std::gcd(a, b);
    return spec.kind == GraphKind::diophantine ? spec.order % g == 0 : g == 1;
}

void check_pair(u64 a, u64 b, const MaximalGraphSpec& spec) {
    if (a < 1 || a > spec.order || b < 1 || b > spec.order)
        throw std::invalid_argument("maximal: label out of range");
    if (a == b) throw std::invalid_argument("maximal: loops are not part of the graph");
}

void check_label(u64 a, const MaximalGraphSpec& spec) {
    if (a < 1 || a > spec.order) throw std::invalid_argument("maximal: label out of range");
}

}  // namespace

int MaximalGraphSpec::valuation_of(u64 p) const {
    if (kind == GraphKind::prime) return 0;
    return order_factors.exponent_of(p);
}

u64 MaximalGraphSpec::critical_power_of(u64 p) const {
    u64 power = p;
    for (int i = 0; i < valuation_of(p); ++i) power *= p;
    return power;
}

MaximalGraphSpec make_maximal_spec(u64 n, GraphKind kind) {
    if (n == 0) throw std::invalid_argument("make_maximal_spec: order must be positive");
    if (n > kFormulaOrderCap) throw std::invalid_argument("make_maximal_spec: order exceeds 10^7 cap");
    MaximalGraphSpec spec;
    spec.order = n;
    spec.kind = kind;
    spec.order_factors = factorize(n);
    for (u64 p : primes_upto(n / 2)) {
        const int v = spec.valuation_of(p);
        u64 power = p;
        bool in_range = true;
        for (int i = 0; i < v; ++i) {
            if (power > n / p) {  // already past n: cannot have two multiples
                in_range = false;
                break;
            }
            power *= p;
        }
        if (in_range && 2 * power <= n)
            spec.nonedge_powers.push_back({p, v, v + 1, power});
    }
    std::sort(spec.nonedge_powers.begin(), spec.nonedge_powers.end(),
              [](const CriticalPower& x, const CriticalPower& y) { return x.power < y.power; });
    return spec;
}

bool is_adjacent(u64 a, u64 b, const MaximalGraphSpec& spec) {
    check_pair(a, b, spec);
    return adjacent_unchecked(a, b, spec);
}

std::optional<u64> nonadjacency_witness(u64 a, u64 b, const MaximalGraphSpec& spec) {
    check_pair(a, b, spec);
    if (adjacent_unchecked(a, b, spec)) return std::nullopt;
    for (const auto& f : factorize(std::gcd(a, b)).factors) {
        const u64 q = spec.critical_power_of(f.prime);
        if (a % q == 0 && b % q == 0) return f.prime;
    }
    assert(false && "every nonadjacent pair has a critical-power witness");
    throw std::logic_error("nonadjacency_witness: no witness for nonadjacent pair");
}

u64 edge_count_formula(const MaximalGraphSpec& spec) {
    const u64 n = spec.order;
    i64 total = static_cast<i64>(choose2(n));
    const auto& powers = spec.nonedge_powers;

    // alternating sum over subsets of critical powers, pruned where terms vanish
    auto dfs = [&](auto&& self, size_t from, u64 product, i64 sign) -> void {
        for (size_t i = from; i < powers.size(); ++i) {
            const u64 next = product * powers[i].power;
            if (2 * next > n) break;  // powers ascend, so every later subset vanishes too
            total += sign * static_cast<i64>(choose2(n / next));
            self(self, i + 1, next, -sign);
        }
    };
    dfs(dfs, 0, 1, -1);
    assert(total >= 0);
    return static_cast<u64>(total);
}

u64 edge_count_bruteforce(const MaximalGraphSpec& spec) {
    const u64 n = spec.order;
    auto scan_rows = [&](u64 first, u64 stride) {
        u64 count = 0;
        for (u64 a = first; a <= n; a += stride)
            for (u64 b = a + 1; b <= n; ++b)
                if (adjacent_unchecked(a, b, spec)) ++count;
        return count;
    };

    const unsigned workers = std::thread::hardware_concurrency();
    if (n < 2048 || workers < 2) return scan_rows(1, 1);

    std::vector<u64> partial(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { partial[w] = scan_rows(w + 1, workers); });
    for (auto& t : pool) t.join();
    u64 total = 0;
    for (u64 c : partial) total += c;
    return total;
}

u64 degree_formula(u64 a, const MaximalGraphSpec& spec) {
    check_label(a, spec);
    const u64 n = spec.order;
    const u64 reduced = spec.kind == GraphKind::diophantine ? a / std::gcd(a, n) : a;
    if (reduced == 1) return n - 1;

    std::vector<u64> powers;
    for (const auto& f : factorize(reduced).factors) powers.push_back(spec.critical_power_of(f.prime));
    std::sort(powers.begin(), powers.end());

    i64 total = static_cast<i64>(n);
    auto dfs = [&](auto&& self, size_t from, u64 product, i64 sign) -> void {
        for (size_t i = from; i < powers.size(); ++i) {
            const u64 next = product * powers[i];
            if (next > n) break;
            total += sign * static_cast<i64>(n / next);
            self(self, i + 1, next, -sign);
        }
    };
    dfs(dfs, 0, 1, -1);
    assert(total >= 0);
    return static_cast<u64>(total);
}

u64 degree_bruteforce(u64 a, const MaximalGraphSpec& spec) {
    check_label(a, spec);
    u64 count = 0;
    for (u64 b = 1; b <= spec.order; ++b)
        if (b != a && adjacent_unchecked(a, b, spec)) ++count;
    return count;
}

namespace {

bool is_critical_power_label(u64 a, const MaximalGraphSpec& spec) {
    const auto f = factorize(a);
    return f.is_prime_power() && a == spec.critical_power_of(f.factors[0].prime);
}

bool divides_order_branch(u64 a, const MaximalGraphSpec& spec) {
    return spec.kind == GraphKind::diophantine ? spec.order % a == 0 : a == 1;
}

bool critical_window_branch(u64 a, const MaximalGraphSpec& spec) {
    const u64 n = spec.order;
    if (spec.kind == GraphKind::diophantine)
        return a < n && 2 * a > n && is_critical_power_label(a, spec);
    // prime kind: the critical power of p is p itself, and the label n
    // qualifies when n is prime (every other multiple of it exceeds n)
    return 2 * a > n && is_prime(a);
}

}  // namespace

std::vector<u64> full_degree_labels(const MaximalGraphSpec& spec) {
    if (spec.order < 2) throw std::invalid_argument("full_degree_labels: order must be >= 2");
    std::vector<u64> labels;
    for (u64 a = 1; a <= spec.order; ++a)
        if (divides_order_branch(a, spec) || critical_window_branch(a, spec)) labels.push_back(a);
    return labels;
}

std::vector<u64> full_degree_overlap_anomalies(const MaximalGraphSpec& spec) {
    std::vector<u64> overlap;
    for (u64 a = 1; a <= spec.order; ++a)
        if (divides_order_branch(a, spec) && critical_window_branch(a, spec)) overlap.push_back(a);
    return overlap;
}

DegreeReport degree_classes(const MaximalGraphSpec& spec) {
    if (spec.order < 2) throw std::invalid_argument("degree_classes: order must be >= 2");
    DegreeReport report;
    report.order = spec.order;
    report.degrees.assign(spec.order + 1, 0);
    for (u64 a = 1; a <= spec.order; ++a) {
        const u64 d = degree_formula(a, spec);
        report.degrees[a] = d;
        report.classes[d].push_back(a);
        if (d == spec.order - 1) report.full_degree_labels.push_back(a);
    }
    return report;
}

bool dn_equals_rn(u64 n) {
    if (n < 2) throw std::invalid_argument("dn_equals_rn: order must be >= 2");
    for (u64 a = 1; a <= n; ++a)
        for (u64 b = a + 1; b <= n; ++b) {
            const u64 g = std::gcd(a, b);
            if ((g == 1) != (n % g == 0)) return false;
        }
    return true;
}

u64 seoud_youssef_bound(u64 n) {
    if (n < 2) throw std::invalid_argument("seoud_youssef_bound: order must be >= 2");
    return prime_pi(n) + prime_pi(n / 2) + 1;
}

namespace {

// Max clique over the conflict graph (pairs that share a critical power),
// which is the independence number of the maximal graph itself.
class ConflictCliqueSearch {
public:
    ConflictCliqueSearch(const MaximalGraphSpec& spec, u64 node_budget)
        : budget_(node_budget) {
        const u64 n = spec.order;
        std::vector<u64> members;
        std::vector<char> involved(n + 1, 0);
        for (const auto& cp : spec.nonedge_powers)
            for (u64 m = cp.power; m <= n; m += cp.power) involved[m] = 1;
        for (u64 a = 1; a <= n; ++a)
            if (involved[a]) vertices_.push_back(a);

        const size_t k = vertices_.size();
        words_ = (k + 63) / 64;
        adj_.assign(k * words_, 0);
        std::vector<size_t> index_of(n + 1, 0);
        for (size_t i = 0; i < k; ++i) index_of[vertices_[i]] = i;
        for (const auto& cp : spec.nonedge_powers) {
            std::vector<size_t> group;
            for (u64 m = cp.power; m <= n; m += cp.power) group.push_back(index_of[m]);
            for (size_t i : group)
                for (size_t j : group)
                    if (i != j) adj_[i * words_ + j / 64] |= u64{1} << (j % 64);
        }
        // greedy incumbent: the largest single critical-power group
        for (const auto& cp : spec.nonedge_powers)
            best_ = std::max(best_, n / cp.power);
    }

    IndependenceBound run() {
        const size_t k = vertices_.size();
        if (k == 0) return {1, true};
        std::vector<u64> all(words_, 0);
        for (size_t i = 0; i < k; ++i) all[i / 64] |= u64{1} << (i % 64);
        expand(all, 0);
        return {std::max<u64>(best_, 1), !budget_hit_};
    }

private:
    const u64* row(size_t v) const { return adj_.data() + v * words_; }

    static size_t popcount(const std::vector<u64>& bits) {
        size_t c = 0;
        for (u64 w : bits) c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }

    // greedy sequential colouring of the candidate set; emits vertices in
    // reverse colour order so the tightest bounds are explored first
    void colour_sort(const std::vector<u64>& cand, std::vector<size_t>& order,
                     std::vector<u64>& bound) const {
        order.clear();
        bound.clear();
        std::vector<u64> uncoloured = cand;
        u64 colour = 0;
        while (popcount(uncoloured) > 0) {
            ++colour;
            std::vector<u64> available = uncoloured;
            for (size_t w = 0; w < words_; ++w) {
                while (available[w]) {
                    const size_t v = w * 64 + static_cast<size_t>(__builtin_ctzll(available[w]));
                    available[w] &= available[w] - 1;
                    uncoloured[v / 64] &= ~(u64{1} << (v % 64));
                    for (size_t x = 0; x < words_; ++x) available[x] &= ~row(v)[x];
                    order.push_back(v);
                    bound.push_back(colour);
                }
            }
        }
    }

    void expand(const std::vector<u64>& cand, u64 clique_size) {
        if (budget_hit_) return;
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return;
        }
        std::vector<size_t> order;
        std::vector<u64> bound;
        colour_sort(cand, order, bound);
        std::vector<u64> remaining = cand;
        for (size_t i = order.size(); i-- > 0;) {
            if (clique_size + bound[i] <= best_) return;
            const size_t v = order[i];
            remaining[v / 64] &= ~(u64{1} << (v % 64));
            std::vector<u64> next(words_);
            bool nonempty = false;
            for (size_t w = 0; w < words_; ++w) {
                next[w] = remaining[w] & row(v)[w];
                // vertex v itself is already cleared from remaining
                nonempty |= next[w] != 0;
            }
            if (nonempty)
                expand(next, clique_size + 1);
            else
                best_ = std::max(best_, clique_size + 1);
            if (budget_hit_) return;
        }
    }

    std::vector<u64> vertices_;
    size_t words_ = 0;
    std::vector<u64> adj_;
    u64 best_ = 1;
    u64 nodes_ = 0;
    u64 budget_ = 0;
    bool budget_hit_ = false;
};

}  // namespace

IndependenceBound max_independent_set(const MaximalGraphSpec& spec, u64 node_budget) {
    if (spec.order > 4096)
        throw std::invalid_argument("max_independent_set: order above 4096 not supported");
    return ConflictCliqueSearch(spec, node_budget).run();
}

}  // namespace dioph
