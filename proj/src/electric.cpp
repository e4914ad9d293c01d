#include "graphlab/electric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "graphlab/linalg.hpp"
#include "graphlab/walks.hpp"

namespace graphlab {

namespace {

void require_network(const WeightedGraph& g) {
    if (g.has_self_loop())
        throw std::invalid_argument("electrical-network operations reject self-loops");
    if (g.node_count() < 2) throw std::invalid_argument("need at least two nodes");
    if (g.node_count() - 1 > linalg::kMaxDenseDim)
        throw std::invalid_argument("graph exceeds the dense-solver cap of " +
                                    std::to_string(linalg::kMaxDenseDim + 1) + " nodes");
    if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
}

}  // namespace

PotentialSolution effective_resistance(const WeightedGraph& g, NodeId source, NodeId sink) {
    require_network(g);
    g.check_node(source);
    g.check_node(sink);
    if (source == sink) throw std::invalid_argument("effective_resistance: need source != sink");

    const NodeId n = g.node_count();
    std::vector<std::size_t> index(n + 1, 0);
    std::size_t slot = 0;
    for (NodeId z = 1; z <= n; ++z)
        if (z != sink) index[z] = ++slot;

    // Grounded Laplacian: row z is mu_z V_z - sum_w c_zw V_w = [z == source].
    linalg::Matrix laplacian(n - 1, n - 1);
    std::vector<double> rhs(n - 1, 0.0);
    for (NodeId z = 1; z <= n; ++z) {
        if (z == sink) continue;
        const std::size_t row = index[z] - 1;
        laplacian(row, row) = g.degree(z);
        for (const auto& [w, c] : g.neighbors(z))
            if (w != sink) laplacian(row, index[w] - 1) -= c;
    }
    rhs[index[source] - 1] = 1.0;
    const std::vector<double> grounded = linalg::lu_solve(laplacian, rhs);

    PotentialSolution out;
    out.source = source;
    out.sink = sink;
    out.potentials.assign(n, 0.0);
    for (NodeId z = 1; z <= n; ++z)
        if (z != sink) out.potentials[z - 1] = grounded[index[z] - 1];
    out.r_eff = out.potentials[source - 1];

    out.currents.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        out.currents.push_back(
            EdgeCurrent{e.x, e.y, (out.potentials[e.x - 1] - out.potentials[e.y - 1]) * e.c});

    for (NodeId z = 1; z <= n; ++z) {
        if (z == source || z == sink) continue;
        double averaged = 0.0;
        const double mu = g.degree(z);
        for (const auto& [w, c] : g.neighbors(z)) averaged += (c / mu) * out.potentials[w - 1];
        out.max_harmonic_residual =
            std::max(out.max_harmonic_residual, std::fabs(out.potentials[z - 1] - averaged));
    }
    if (out.max_harmonic_residual > 1e-6)
        throw std::runtime_error("effective_resistance: solver residual unexpectedly large");
    return out;
}

TetaliReport verify_tetali(const WeightedGraph& g) {
    require_network(g);

    // One hitting-time solve per target node covers every directed edge
    // (x, y): the solve for target y provides E^x(tau_y) for all x ~ y.
    double weighted_sum = 0.0;
    for (NodeId y = 1; y <= g.node_count(); ++y) {
        const HittingSolution solution = hitting_times(g, y);
        for (const auto& [x, c] : g.neighbors(y)) weighted_sum += solution.times[x - 1] * c;
    }

    TetaliReport report;
    report.lhs = weighted_sum / g.total_weight();
    report.rhs = static_cast<double>(g.node_count()) - 1.0;
    report.abs_err = std::fabs(report.lhs - report.rhs);
    report.rel_err = report.abs_err / report.rhs;
    return report;
}

}  // namespace graphlab
