#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphlab/weighted_graph.hpp"

namespace graphlab {

// Integer degree histogram of a graph. Weighted graphs with non-integer node
// weights are rejected; generators emit unit or integer-multiplicity
// conductances, which is what the histogram is for.
struct DegreeHistogram {
    std::vector<std::uint64_t> counts;  // counts[k] = number of nodes with degree k
    std::uint64_t n = 0;                // total node count

    std::uint64_t count(std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
    double pmf(std::size_t k) const;
    std::size_t max_degree() const { return counts.empty() ? 0 : counts.size() - 1; }
    double mean() const;
    // ccdf()[s] = number of nodes with degree >= s, for s = 0..max_degree()+1.
    std::vector<std::uint64_t> ccdf() const;

    void merge(const DegreeHistogram& other);  // pooling across replicas
};

enum class DegreeView {
    multiplicity,  // node weight; parallel edges and self-loops (twice) count
    simple,        // number of distinct neighbors, self-loops ignored
};

DegreeHistogram histogram(const WeightedGraph& g,
                          DegreeView view = DegreeView::multiplicity);

// Discrete maximum-likelihood power-law exponent (Hill estimator with the
// usual -1/2 continuity correction) over the tail k >= k_min:
//   tau = 1 + n_tail / sum_i ln(k_i / (k_min - 1/2)).
// Without an explicit k_min the smallest positive degree is used. Throws if
// the tail has fewer than two nodes or every tail degree equals k_min.
struct PowerLawFit {
    double tau = 0.0;
    std::uint64_t k_min = 0;
    std::uint64_t n_tail = 0;
};

PowerLawFit fit_power_law(const DegreeHistogram& h,
                          std::optional<std::uint64_t> k_min = std::nullopt);

// Binomial pmf C(n, l) p^l (1-p)^(n-l), evaluated in log space.
double binomial_pmf(std::uint64_t n_trials, double p, std::uint64_t l);

// Full pmf vector (index l = 0..n_trials) by the stable ratio recurrence.
std::vector<double> binomial_pmf_table(std::uint64_t n_trials, double p);

// max_l | Bin(n1, p1).pmf(l) - Bin(n2, p2).pmf(l) |.
double binomial_max_abs_diff(std::uint64_t n1, double p1, std::uint64_t n2, double p2);

// Deviation between the degree laws of the two node-sampling mechanisms on
// G(n, p): for every subgraph size m in [1, n], the max-abs pmf difference of
// Bin(m-1, p) and Bin(n-1, p*m/n). Index 0 of the result holds m = 1.
std::vector<double> node_sampler_binomial_deviation(NodeId n, double p);

}  // namespace graphlab
