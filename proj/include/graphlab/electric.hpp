#pragma once

#include <cstdint>
#include <vector>

#include "graphlab/weighted_graph.hpp"

namespace graphlab {

// The graph viewed as a resistor network: conductance c_xy per edge,
// resistance 1/c_xy. effective_resistance drives a unit current from source
// to sink by solving the grounded Laplacian system L V = e_source with the
// sink row and column removed (V_sink = 0); the effective resistance is the
// source potential.
struct EdgeCurrent {
    NodeId from = 0;  // canonical edge orientation from = x <= y = to
    NodeId to = 0;
    double value = 0.0;  // (V_from - V_to) * c; negative means flow to->from
};

struct PotentialSolution {
    NodeId source = 0;
    NodeId sink = 0;
    std::vector<double> potentials;  // V_{z,sink}, index z-1, 0 at the sink
    std::vector<EdgeCurrent> currents;
    double r_eff = 0.0;
    // Largest violation of V_z = sum_w p_zw V_w over interior nodes.
    double max_harmonic_residual = 0.0;
};

PotentialSolution effective_resistance(const WeightedGraph& g, NodeId source, NodeId sink);

// Commute-time identity over the whole edge set (Tetali's theorem on
// weighted graphs): sum over directed edges (x,y) of E^x(tau_y) c_xy,
// divided by the total directed conductance, equals n - 1.
struct TetaliReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

TetaliReport verify_tetali(const WeightedGraph& g);

}  // namespace graphlab
