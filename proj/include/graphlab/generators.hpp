#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphlab/weighted_graph.hpp"

namespace graphlab {

// Erdos-Renyi G(n, p): every unordered pair {i, j}, i < j, is an edge
// independently with probability p.
struct ErParams {
    NodeId n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

WeightedGraph generate_er(const ErParams& params);

// Preferential attachment with m edges per new node and degree shift
// delta > -m. The graph starts as one node carrying m self-loops (degree 2m);
// node t+1 then draws its m endpoints i.i.d. from the existing nodes with
// probability (degree(i) + delta) / ((2m + delta) t), degrees held fixed
// during the m draws, so repeated endpoints create parallel edges. New nodes
// never self-loop, so the graph minus node 1's loops is connected.
struct PaParams {
    NodeId n = 0;
    std::uint32_t m = 1;
    double delta = 0.0;
    std::uint64_t seed = 0;
};

struct DegreeSample {
    NodeId time = 0;    // graph size when sampled
    NodeId node = 0;
    std::uint64_t degree = 0;
};

struct PaTrace {
    WeightedGraph graph;  // multiplicity conductances; node 1 keeps its self-loops
    std::vector<DegreeSample> degree_history;  // for tracked nodes, each step
};

PaTrace generate_pa(const PaParams& params, std::span<const NodeId> track_nodes = {});

}  // namespace graphlab
