#include "graphlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graphlab/rng.hpp"

namespace graphlab {

namespace {

void validate(const ErParams& p) {
    if (p.n < 1) throw std::invalid_argument("generate_er: need n >= 1");
    if (!(p.p >= 0.0 && p.p <= 1.0)) throw std::invalid_argument("generate_er: need p in [0, 1]");
}

void validate(const PaParams& p) {
    if (p.n < 1) throw std::invalid_argument("generate_pa: need n >= 1");
    if (p.m < 1) throw std::invalid_argument("generate_pa: need m >= 1");
    if (!(p.delta > -static_cast<double>(p.m)))
        throw std::invalid_argument("generate_pa: need delta > -m");
}

// Fenwick tree over node attachment weights, 1-based.
class FenwickTree {
public:
    explicit FenwickTree(std::size_t n) : tree_(n + 1, 0.0) {
        size_t p = 1;
        while (p * 2 <= n) p *= 2;
        top_ = p;
    }

    void add(std::size_t i, double v) {
        for (; i < tree_.size(); i += i & (~i + 1)) tree_[i] += v;
    }

    // Smallest index i with prefix_sum(i) > u.
    std::size_t find(double u) const {
        std::size_t pos = 0;
        for (std::size_t step = top_; step > 0; step >>= 1) {
            const std::size_t next = pos + step;
            if (next < tree_.size() && tree_[next] <= u) {
                u -= tree_[next];
                pos = next;
            }
        }
        return pos + 1;
    }

private:
    std::vector<double> tree_;
    std::size_t top_ = 1;
};

}  // namespace

WeightedGraph generate_er(const ErParams& params) {
    validate(params);
    const NodeId n = params.n;
    std::vector<Edge> edges;

    const std::uint64_t pair_count =
        static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (params.p == 0.0 || pair_count == 0) return WeightedGraph(n, {}, false);

    if (params.p == 1.0) {
        edges.reserve(pair_count);
        for (NodeId i = 1; i <= n; ++i)
            for (NodeId j = i + 1; j <= n; ++j) edges.push_back(Edge{i, j, 1.0});
        return WeightedGraph(n, std::move(edges), false);
    }

    // Geometric skipping over the linearized pair sequence: the gap between
    // successive kept pairs is Geometric(p), which reproduces independent
    // Bernoulli(p) decisions in O(#edges) draws.
    Rng rng(params.seed);
    const double log_keep = std::log1p(-params.p);  // log(1 - p) < 0
    std::uint64_t pos = 0;                          // next undecided pair index
    NodeId row = 1;                                 // pairs (row, row+1..n)
    std::uint64_t row_start = 0;
    std::uint64_t row_len = n - 1;
    while (pos < pair_count) {
        const double u = 1.0 - rng.next_double();  // (0, 1]
        const double skip = std::floor(std::log(u) / log_keep);
        if (skip >= static_cast<double>(pair_count - pos)) break;
        pos += static_cast<std::uint64_t>(skip);
        while (pos >= row_start + row_len) {
            row_start += row_len;
            ++row;
            row_len = n - row;
        }
        const NodeId j = static_cast<NodeId>(row + 1 + (pos - row_start));
        edges.push_back(Edge{row, j, 1.0});
        ++pos;
    }
    return WeightedGraph(n, std::move(edges), false);
}

PaTrace generate_pa(const PaParams& params, std::span<const NodeId> track_nodes) {
    validate(params);
    const NodeId n = params.n;
    const std::uint32_t m = params.m;
    const double delta = params.delta;
    const double scale = 2.0 * m + delta;

    std::vector<NodeId> tracked(track_nodes.begin(), track_nodes.end());
    std::sort(tracked.begin(), tracked.end());
    tracked.erase(std::unique(tracked.begin(), tracked.end()), tracked.end());
    for (NodeId i : tracked)
        if (i < 1 || i > n) throw std::invalid_argument("generate_pa: tracked node out of range");

    std::vector<std::uint64_t> degree(n + 1, 0);
    degree[1] = 2ULL * m;
    FenwickTree weights(n);
    weights.add(1, 2.0 * m + delta);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * m);
    edges.push_back(Edge{1, 1, static_cast<double>(m)});

    PaTrace trace;
    auto record = [&](NodeId time) {
        for (NodeId i : tracked) {
            if (i > time) break;
            trace.degree_history.push_back(DegreeSample{time, i, degree[i]});
        }
    };
    record(1);

    Rng rng(params.seed);
    std::vector<NodeId> targets(m);
    for (NodeId t = 1; t < n; ++t) {
        const NodeId newcomer = t + 1;
        const double total = scale * static_cast<double>(t);
        for (std::uint32_t j = 0; j < m; ++j) {
            const double u = rng.next_double() * total;
            NodeId pick = static_cast<NodeId>(weights.find(u));
            if (pick > t) pick = t;  // guard against prefix-sum rounding at the edge
            targets[j] = pick;
        }
        // Degrees update only after all m draws.
        std::sort(targets.begin(), targets.end());
        for (std::uint32_t j = 0; j < m;) {
            std::uint32_t run = 1;
            while (j + run < m && targets[j + run] == targets[j]) ++run;
            edges.push_back(Edge{targets[j], newcomer, static_cast<double>(run)});
            degree[targets[j]] += run;
            weights.add(targets[j], static_cast<double>(run));
            j += run;
        }
        degree[newcomer] = m;
        weights.add(newcomer, static_cast<double>(m) + delta);
        record(newcomer);
    }

    trace.graph = WeightedGraph(n, std::move(edges), true);
    return trace;
}

}  // namespace graphlab
