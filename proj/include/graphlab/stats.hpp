#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace graphlab {

struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased (n-1 denominator), 0 for count < 2
    double sd = 0.0;
    double std_error = 0.0;  // sd / sqrt(count)
};

Summary summarize(std::span<const double> values);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t df = 0;
    double p_value = 1.0;
    std::size_t bins = 0;  // after pooling
};

// Goodness-of-fit test of observed counts (indexed by outcome 0..len-1)
// against the model pmf. Probability mass beyond the observed range is
// lumped into a final bin; adjacent bins are pooled until each expected
// count reaches min_expected.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               const std::function<double(std::size_t)>& pmf,
                               double min_expected = 5.0);

// Two-sample chi-square homogeneity test on two count vectors over the same
// outcome range. Bins are pooled until each combined count reaches
// min_combined.
ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b,
                                      double min_combined = 10.0);

// Bootstrap standard error of the sample variance.
double bootstrap_variance_stderr(std::span<const double> values,
                                 std::size_t resamples,
                                 std::uint64_t seed);

}  // namespace graphlab
