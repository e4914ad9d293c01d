#pragma once

#include <cstdint>
#include <vector>

#include "graphlab/weighted_graph.hpp"

namespace graphlab {

// The three subgraph constructions. Edge sampling keeps every node and
// decides per stored edge record; node sampling keeps an edge only when both
// endpoints survive and relabels the kept nodes to 1..#kept in ascending
// order of their original ids.

struct SamplerSpec {
    enum class Kind { edge_bernoulli, node_uniform, node_bernoulli };
    Kind kind = Kind::edge_bernoulli;
    double q = 1.0;           // edge_bernoulli, node_bernoulli
    NodeId m_keep = 0;        // node_uniform
    std::uint64_t seed = 0;
};

struct NodeSample {
    WeightedGraph graph;
    std::vector<NodeId> kept;  // kept[new_id - 1] = original id, ascending
};

WeightedGraph sample_edges(const WeightedGraph& g, double q, std::uint64_t seed);

// Uniformly random m_keep-subset of the nodes (partial Fisher-Yates, exactly
// uniform over all C(n, m_keep) subsets).
NodeSample sample_nodes_uniform(const WeightedGraph& g, NodeId m_keep, std::uint64_t seed);

// Each node kept independently with probability q.
NodeSample sample_nodes_bernoulli(const WeightedGraph& g, double q, std::uint64_t seed);

NodeSample apply_sampler(const WeightedGraph& g, const SamplerSpec& spec);

}  // namespace graphlab
