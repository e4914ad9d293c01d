#pragma once

#include <cstdint>
#include <vector>

namespace graphlab {

// Closed-form laws of the preferential-attachment model PA(m, delta), all
// Gamma ratios evaluated as log-Gamma differences.

// Limiting degree distribution p_k: zero for k < m, for k >= m
//   p_k = (2 + delta/m) * Gamma(k+delta) Gamma(m+2+delta+delta/m)
//                       / (Gamma(m+delta) Gamma(k+3+delta+delta/m)).
double pa_limit_pmf(std::uint32_t m, double delta, std::uint64_t k);

// p_0..p_k_max by the exact ratio recurrence
// p_{k+1} = p_k (k+delta) / (k+3+delta+delta/m); matches pa_limit_pmf.
std::vector<double> pa_limit_pmf_table(std::uint32_t m, double delta, std::uint64_t k_max);

// Large-k power law p_k ~ c_{m,delta} k^{-tau}.
double pa_tau(std::uint32_t m, double delta);
double pa_c(std::uint32_t m, double delta);

// E(degree of node i in the graph of size n):
//   E(D(i) + delta) = (m + [i==1] m + delta)
//                     * Gamma(n+a) Gamma(i) / (Gamma(i+a) Gamma(n)),
// a = m/(2m+delta), reported on the degree scale (delta subtracted).
double pa_expected_degree(std::uint32_t m, double delta, std::uint64_t i, std::uint64_t n);

// Var(degree of node i at size n), via the closed product/sum form and,
// independently, via the step recursion from the underlying V/E/D system.
// The two agree to near machine precision; both are exposed so they can be
// checked against each other.
double pa_degree_variance(std::uint32_t m, double delta, std::uint64_t i, std::uint64_t n);
double pa_degree_variance_recursion(std::uint32_t m, double delta, std::uint64_t i,
                                    std::uint64_t n);

// Coefficient functions of the variance recursion.
struct PaMoments {
    std::uint32_t m = 1;
    double delta = 0.0;

    double c_coeff(std::uint64_t j) const;  // m / ((2m+delta)^2 j^2)
    double d_coeff(std::uint64_t j) const;  // (1 + m/((2m+delta) j))^2
    double expected_degree(std::uint64_t i, std::uint64_t n) const;
    double variance(std::uint64_t i, std::uint64_t n) const;
    double variance_by_recursion(std::uint64_t i, std::uint64_t n) const;
};

}  // namespace graphlab
