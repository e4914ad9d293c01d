#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphlab {

// Node ids are 1-based throughout the public API.
using NodeId = std::uint32_t;

struct Edge {
    NodeId x = 0;  // canonical x <= y after construction
    NodeId y = 0;
    double c = 0.0;  // conductance, > 0 for stored edges
};

// Undirected weighted graph on nodes 1..n with symmetric conductances.
// One record is stored per unordered pair; duplicate input records are
// merged by summing their conductances (generators use integer conductances
// to retain parallel-edge multiplicity). A self-loop contributes twice its
// conductance to the node weight, so the weight sum stays equal to twice the
// total conductance.
//
// Immutable after construction; safe for concurrent reads.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(NodeId n, std::vector<Edge> edges, bool allow_self_loops = false);

    NodeId node_count() const { return n_; }
    bool allows_self_loops() const { return allow_self_loops_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges in canonical order: x <= y, sorted by (x, y).
    const std::vector<Edge>& edges() const { return edges_; }

    // Neighbors of x as (node, conductance) pairs, ascending by node id.
    // A self-loop appears once as (x, c).
    std::span<const std::pair<NodeId, double>> neighbors(NodeId x) const;

    // Generalized degree (node weight) mu_x: sum of incident conductances,
    // self-loops counted twice. Equals the integer degree on unit-weight
    // graphs and the multigraph degree on multiplicity-weight graphs.
    double degree(NodeId x) const;

    // mu_x for all nodes, index x-1.
    const std::vector<double>& node_weights() const { return mu_; }

    // sum_x mu_x = 2 * total_conductance().
    double total_weight() const;
    double total_conductance() const;

    bool has_self_loop() const { return self_loop_count_ > 0; }
    bool is_unit_weighted() const;  // every stored conductance equals 1

    bool is_connected() const;
    // Connected components ordered by smallest member, nodes ascending.
    std::vector<std::vector<NodeId>> components() const;

    // Copy without self-loop records (node count unchanged).
    WeightedGraph strip_self_loops() const;

    void check_node(NodeId x) const;  // throws std::invalid_argument if out of range

private:
    NodeId n_ = 0;
    bool allow_self_loops_ = false;
    std::size_t self_loop_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> mu_;
    std::vector<std::size_t> adj_start_;               // CSR offsets, size n+1
    std::vector<std::pair<NodeId, double>> adj_;
};

}  // namespace graphlab
