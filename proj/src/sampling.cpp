#include "graphlab/sampling.hpp"

#include <numeric>
#include <stdexcept>

#include "graphlab/rng.hpp"

namespace graphlab {

namespace {

void check_probability(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("sampler: need q in [0, 1]");
}

// Induce the subgraph on `kept` (ascending original ids) and relabel.
NodeSample induce(const WeightedGraph& g, std::vector<NodeId> kept) {
    std::vector<NodeId> new_id(g.node_count() + 1, 0);
    for (std::size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = static_cast<NodeId>(i + 1);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (new_id[e.x] != 0 && new_id[e.y] != 0)
            edges.push_back(Edge{new_id[e.x], new_id[e.y], e.c});

    NodeSample out;
    out.graph = WeightedGraph(static_cast<NodeId>(kept.size()), std::move(edges),
                              g.allows_self_loops());
    out.kept = std::move(kept);
    return out;
}

}  // namespace

WeightedGraph sample_edges(const WeightedGraph& g, double q, std::uint64_t seed) {
    check_probability(q);
    Rng rng(seed);
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        if (rng.bernoulli(q)) kept.push_back(e);
    return WeightedGraph(g.node_count(), std::move(kept), g.allows_self_loops());
}

NodeSample sample_nodes_uniform(const WeightedGraph& g, NodeId m_keep, std::uint64_t seed) {
    if (m_keep > g.node_count())
        throw std::invalid_argument("sample_nodes_uniform: m_keep exceeds node count");
    Rng rng(seed);
    std::vector<NodeId> ids(g.node_count());
    std::iota(ids.begin(), ids.end(), NodeId{1});
    for (NodeId i = 0; i < m_keep; ++i) {
        const std::uint64_t j = i + rng.next_below(ids.size() - i);
        std::swap(ids[i], ids[j]);
    }
    std::vector<NodeId> kept(ids.begin(), ids.begin() + m_keep);
    std::sort(kept.begin(), kept.end());
    return induce(g, std::move(kept));
}

NodeSample sample_nodes_bernoulli(const WeightedGraph& g, double q, std::uint64_t seed) {
    check_probability(q);
    Rng rng(seed);
    std::vector<NodeId> kept;
    for (NodeId i = 1; i <= g.node_count(); ++i)
        if (rng.bernoulli(q)) kept.push_back(i);
    return induce(g, std::move(kept));
}

NodeSample apply_sampler(const WeightedGraph& g, const SamplerSpec& spec) {
    switch (spec.kind) {
        case SamplerSpec::Kind::edge_bernoulli: {
            NodeSample out;
            out.graph = sample_edges(g, spec.q, spec.seed);
            out.kept.resize(g.node_count());
            std::iota(out.kept.begin(), out.kept.end(), NodeId{1});
            return out;
        }
        case SamplerSpec::Kind::node_uniform:
            return sample_nodes_uniform(g, spec.m_keep, spec.seed);
        case SamplerSpec::Kind::node_bernoulli:
            return sample_nodes_bernoulli(g, spec.q, spec.seed);
    }
    throw std::logic_error("apply_sampler: unknown kind");
}

}  // namespace graphlab
