#pragma once

#include <cstdint>
#include <vector>

#include "graphlab/weighted_graph.hpp"

namespace graphlab {

// Markov chain on a weighted graph: from x, step to neighbor y with
// probability c_xy / mu_x. Self-loops are rejected by this whole module;
// strip preferential-attachment output first.
class TransitionModel {
public:
    explicit TransitionModel(const WeightedGraph& g);

    double probability(NodeId x, NodeId y) const;
    const WeightedGraph& graph() const { return *graph_; }

private:
    const WeightedGraph* graph_;
};

// Expected hitting times T_x = E^x(time to reach target), solved from the
// linear system (P - I) T = -1 with T_target = 0 by eliminating the target
// row and column. max_residual is the largest violation of
// T_x = 1 + sum_z p_xz T_z over all x != target.
struct HittingSolution {
    NodeId target = 0;
    std::vector<double> times;  // index x-1
    double max_residual = 0.0;
};

HittingSolution hitting_times(const WeightedGraph& g, NodeId target);

// E^x(tau_y) + E^y(tau_x).
double commute_time(const WeightedGraph& g, NodeId x, NodeId y);

// Monte Carlo estimate of the walk from source to sink: per-walk hitting
// times and per-node visit counts. Visits are counted over steps
// 0..tau-1, so the start counts once per occupation and the sink never
// counts. Walk w draws from an independent stream (seed, w), which makes the
// result a function of (seed, walk_count) alone, independent of threading.
struct WalkStats {
    NodeId source = 0;
    NodeId sink = 0;
    std::uint64_t walk_count = 0;
    std::uint64_t seed = 0;
    double hitting_mean = 0.0;
    double hitting_variance = 0.0;
    double hitting_stderr = 0.0;
    std::vector<double> visit_mean;    // index z-1; 0 at the sink
    std::vector<double> visit_stderr;  // index z-1
};

WalkStats simulate_walks(const WeightedGraph& g, NodeId source, NodeId sink,
                         std::uint64_t walk_count, std::uint64_t seed,
                         unsigned threads = 1);

}  // namespace graphlab
