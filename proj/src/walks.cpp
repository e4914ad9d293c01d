#include "graphlab/walks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "graphlab/linalg.hpp"
#include "graphlab/rng.hpp"

namespace graphlab {

namespace {

void require_walkable(const WeightedGraph& g) {
    if (g.has_self_loop())
        throw std::invalid_argument("random-walk operations reject self-loops; strip them first");
    if (g.node_count() < 2) throw std::invalid_argument("need at least two nodes");
    if (g.node_count() - 1 > linalg::kMaxDenseDim)
        throw std::invalid_argument("graph exceeds the dense-solver cap of " +
                                    std::to_string(linalg::kMaxDenseDim + 1) + " nodes");
    if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
}

}  // namespace

TransitionModel::TransitionModel(const WeightedGraph& g) : graph_(&g) {
    if (g.has_self_loop())
        throw std::invalid_argument("TransitionModel: self-loops are not supported");
    for (NodeId x = 1; x <= g.node_count(); ++x)
        if (g.degree(x) == 0.0)
            throw std::invalid_argument("TransitionModel: node " + std::to_string(x) +
                                        " has no neighbors");
}

double TransitionModel::probability(NodeId x, NodeId y) const {
    graph_->check_node(x);
    graph_->check_node(y);
    for (const auto& [node, c] : graph_->neighbors(x))
        if (node == y) return c / graph_->degree(x);
    return 0.0;
}

HittingSolution hitting_times(const WeightedGraph& g, NodeId target) {
    require_walkable(g);
    g.check_node(target);
    const NodeId n = g.node_count();

    // Unknowns are all nodes except the target; row x encodes
    // T_x - sum_{z != target} p_xz T_z = 1.
    std::vector<std::size_t> index(n + 1, 0);  // node -> unknown slot + 1
    std::size_t slot = 0;
    for (NodeId x = 1; x <= n; ++x)
        if (x != target) index[x] = ++slot;

    linalg::Matrix a(n - 1, n - 1);
    std::vector<double> rhs(n - 1, 1.0);
    for (NodeId x = 1; x <= n; ++x) {
        if (x == target) continue;
        const std::size_t row = index[x] - 1;
        a(row, row) = 1.0;
        const double mu = g.degree(x);
        for (const auto& [z, c] : g.neighbors(x))
            if (z != target) a(row, index[z] - 1) -= c / mu;
    }
    const std::vector<double> solution = linalg::lu_solve(a, rhs);

    HittingSolution out;
    out.target = target;
    out.times.assign(n, 0.0);
    for (NodeId x = 1; x <= n; ++x)
        if (x != target) out.times[x - 1] = solution[index[x] - 1];

    for (NodeId x = 1; x <= n; ++x) {
        if (x == target) continue;
        double expected = 1.0;
        const double mu = g.degree(x);
        for (const auto& [z, c] : g.neighbors(x)) expected += (c / mu) * out.times[z - 1];
        out.max_residual = std::max(out.max_residual, std::fabs(out.times[x - 1] - expected));
    }
    if (out.max_residual > 1e-6)
        throw std::runtime_error("hitting_times: solver residual unexpectedly large");
    return out;
}

double commute_time(const WeightedGraph& g, NodeId x, NodeId y) {
    g.check_node(x);
    g.check_node(y);
    if (x == y) throw std::invalid_argument("commute_time: need x != y");
    const HittingSolution forward = hitting_times(g, y);
    const HittingSolution backward = hitting_times(g, x);
    return forward.times[x - 1] + backward.times[y - 1];
}

namespace {

// Vose alias tables for O(1) neighbor sampling, one per node.
class AliasWalker {
public:
    explicit AliasWalker(const WeightedGraph& g) : offset_(g.node_count() + 1, 0) {
        const NodeId n = g.node_count();
        for (NodeId x = 1; x <= n; ++x) offset_[x] = offset_[x - 1] + g.neighbors(x).size();
        targets_.resize(offset_[n]);
        accept_.resize(offset_[n]);
        alias_.resize(offset_[n]);

        std::vector<double> scaled;
        std::vector<std::uint32_t> small, large;
        for (NodeId x = 1; x <= n; ++x) {
            const auto nbrs = g.neighbors(x);
            const std::size_t k = nbrs.size();
            const std::size_t base = offset_[x - 1];
            const double mu = g.degree(x);
            scaled.assign(k, 0.0);
            small.clear();
            large.clear();
            for (std::size_t i = 0; i < k; ++i) {
                targets_[base + i] = nbrs[i].first;
                scaled[i] = nbrs[i].second / mu * static_cast<double>(k);
                (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
            }
            while (!small.empty() && !large.empty()) {
                const std::uint32_t s = small.back();
                small.pop_back();
                const std::uint32_t l = large.back();
                accept_[base + s] = scaled[s];
                alias_[base + s] = l;
                scaled[l] -= 1.0 - scaled[s];
                if (scaled[l] < 1.0) {
                    large.pop_back();
                    small.push_back(l);
                }
            }
            for (std::uint32_t i : large) accept_[base + i] = 1.0;
            for (std::uint32_t i : small) accept_[base + i] = 1.0;  // rounding leftovers
        }
    }

    NodeId step(NodeId x, Rng& rng) const {
        const std::size_t base = offset_[x - 1];
        const std::size_t k = offset_[x] - base;
        const std::size_t i = rng.next_below(k);
        const double u = rng.next_double();
        const std::size_t pick = u < accept_[base + i] ? i : alias_[base + i];
        return targets_[base + pick];
    }

private:
    std::vector<std::size_t> offset_;
    std::vector<NodeId> targets_;
    std::vector<double> accept_;
    std::vector<std::uint32_t> alias_;
};

struct Tally {
    std::uint64_t tau_sum = 0;
    std::uint64_t tau_sq_sum = 0;
    std::vector<std::uint64_t> visit_sum;
    std::vector<std::uint64_t> visit_sq_sum;

    explicit Tally(std::size_t n) : visit_sum(n, 0), visit_sq_sum(n, 0) {}

    void add(const Tally& other) {
        tau_sum += other.tau_sum;
        tau_sq_sum += other.tau_sq_sum;
        for (std::size_t i = 0; i < visit_sum.size(); ++i) {
            visit_sum[i] += other.visit_sum[i];
            visit_sq_sum[i] += other.visit_sq_sum[i];
        }
    }
};

void run_walks(const WeightedGraph& g, const AliasWalker& walker, NodeId source, NodeId sink,
               std::uint64_t first, std::uint64_t last, std::uint64_t seed, Tally& tally) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> visits(n + 1, 0);
    std::vector<NodeId> touched;
    for (std::uint64_t w = first; w < last; ++w) {
        Rng rng(seed, w);
        NodeId cur = source;
        std::uint64_t tau = 0;
        while (cur != sink) {
            if (visits[cur]++ == 0) touched.push_back(cur);
            ++tau;
            cur = walker.step(cur, rng);
        }
        tally.tau_sum += tau;
        tally.tau_sq_sum += tau * tau;
        for (NodeId z : touched) {
            const std::uint64_t v = visits[z];
            tally.visit_sum[z - 1] += v;
            tally.visit_sq_sum[z - 1] += v * v;
            visits[z] = 0;
        }
        touched.clear();
    }
}

}  // namespace

WalkStats simulate_walks(const WeightedGraph& g, NodeId source, NodeId sink,
                         std::uint64_t walk_count, std::uint64_t seed, unsigned threads) {
    if (g.has_self_loop())
        throw std::invalid_argument("random-walk operations reject self-loops; strip them first");
    if (g.node_count() < 2) throw std::invalid_argument("need at least two nodes");
    if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
    g.check_node(source);
    g.check_node(sink);
    if (source == sink) throw std::invalid_argument("simulate_walks: need source != sink");
    if (walk_count < 1) throw std::invalid_argument("simulate_walks: need walk_count >= 1");

    const AliasWalker walker(g);
    const std::size_t n = g.node_count();
    Tally total(n);

    const unsigned worker_count = std::max(1u, threads);
    if (worker_count == 1 || walk_count < 2 * worker_count) {
        run_walks(g, walker, source, sink, 0, walk_count, seed, total);
    } else {
        std::vector<Tally> parts(worker_count, Tally(n));
        std::vector<std::thread> pool;
        const std::uint64_t chunk = walk_count / worker_count;
        for (unsigned w = 0; w < worker_count; ++w) {
            const std::uint64_t first = w * chunk;
            const std::uint64_t last = (w + 1 == worker_count) ? walk_count : first + chunk;
            pool.emplace_back([&, w, first, last] {
                run_walks(g, walker, source, sink, first, last, seed, parts[w]);
            });
        }
        for (auto& t : pool) t.join();
        // Fixed merge order; the sums are integers, so the result does not
        // depend on the thread count anyway.
        for (const Tally& part : parts) total.add(part);
    }

    const double t = static_cast<double>(walk_count);
    WalkStats stats;
    stats.source = source;
    stats.sink = sink;
    stats.walk_count = walk_count;
    stats.seed = seed;
    stats.hitting_mean = static_cast<double>(total.tau_sum) / t;
    if (walk_count >= 2) {
        stats.hitting_variance = (static_cast<double>(total.tau_sq_sum) -
                                  t * stats.hitting_mean * stats.hitting_mean) /
                                 (t - 1.0);
        stats.hitting_variance = std::max(0.0, stats.hitting_variance);
        stats.hitting_stderr = std::sqrt(stats.hitting_variance / t);
    }
    stats.visit_mean.assign(n, 0.0);
    stats.visit_stderr.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double mean = static_cast<double>(total.visit_sum[i]) / t;
        stats.visit_mean[i] = mean;
        if (walk_count >= 2) {
            const double var =
                std::max(0.0, (static_cast<double>(total.visit_sq_sum[i]) - t * mean * mean) /
                                  (t - 1.0));
            stats.visit_stderr[i] = std::sqrt(var / t);
        }
    }
    return stats;
}

}  // namespace graphlab
