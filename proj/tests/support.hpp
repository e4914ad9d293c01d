#pragma once

// Shared helpers for the test suites.

#include <vector>

#include "graphlab/rng.hpp"
#include "graphlab/weighted_graph.hpp"

namespace testsupport {

// Random connected weighted graph: a random attachment tree keeps it
// connected, extra uniformly chosen pairs add cycles, conductances are
// uniform in [c_lo, c_hi).
inline graphlab::WeightedGraph random_connected_graph(graphlab::NodeId n,
                                                      std::size_t extra_edges,
                                                      std::uint64_t seed,
                                                      double c_lo = 0.1,
                                                      double c_hi = 10.0,
                                                      bool unit_weights = false) {
    using graphlab::Edge;
    using graphlab::NodeId;
    graphlab::Rng rng(seed);
    std::vector<Edge> edges;
    auto weight = [&]() { return unit_weights ? 1.0 : rng.uniform(c_lo, c_hi); };
    for (NodeId v = 2; v <= n; ++v) {
        const NodeId u = static_cast<NodeId>(1 + rng.next_below(v - 1));
        edges.push_back(Edge{u, v, weight()});
    }
    for (std::size_t i = 0; i < extra_edges; ++i) {
        const NodeId a = static_cast<NodeId>(1 + rng.next_below(n));
        const NodeId b = static_cast<NodeId>(1 + rng.next_below(n));
        if (a == b) continue;
        edges.push_back(Edge{a, b, weight()});
    }
    // Duplicate pairs merge by conductance sum inside the constructor, which
    // is fine for these tests.
    return graphlab::WeightedGraph(n, std::move(edges), false);
}

}  // namespace testsupport
