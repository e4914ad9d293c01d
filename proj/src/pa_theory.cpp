#include "graphlab/pa_theory.hpp"

#include <cmath>
#include <stdexcept>

#include "graphlab/special_functions.hpp"

namespace graphlab {

namespace {

void validate_params(std::uint32_t m, double delta) {
    if (m < 1) throw std::invalid_argument("pa theory: need m >= 1");
    if (!(delta > -static_cast<double>(m)))
        throw std::invalid_argument("pa theory: need delta > -m");
}

void validate_node(std::uint64_t i, std::uint64_t n) {
    if (i < 1 || i > n) throw std::invalid_argument("pa theory: need 1 <= i <= n");
}

// E(D^j(i) + delta) at the start of the recursion and its per-step growth
// factor (j + a)/j with a = m/(2m+delta).
double shifted_start(std::uint32_t m, double delta, std::uint64_t i) {
    return static_cast<double>(m) + (i == 1 ? static_cast<double>(m) : 0.0) + delta;
}

}  // namespace

double pa_limit_pmf(std::uint32_t m, double delta, std::uint64_t k) {
    validate_params(m, delta);
    const double md = static_cast<double>(m);
    const double kd = static_cast<double>(k);
    if (k < m) return 0.0;
    const double ratio = delta / md;
    const double logp = log_gamma(kd + delta) + log_gamma(md + 2.0 + delta + ratio) -
                        log_gamma(md + delta) - log_gamma(kd + 3.0 + delta + ratio);
    return (2.0 + ratio) * std::exp(logp);
}

std::vector<double> pa_limit_pmf_table(std::uint32_t m, double delta, std::uint64_t k_max) {
    validate_params(m, delta);
    std::vector<double> pmf(k_max + 1, 0.0);
    if (k_max < m) return pmf;
    pmf[m] = pa_limit_pmf(m, delta, m);
    const double shift = 3.0 + delta + delta / static_cast<double>(m);
    for (std::uint64_t k = m; k < k_max; ++k) {
        const double kd = static_cast<double>(k);
        pmf[k + 1] = pmf[k] * (kd + delta) / (kd + shift);
    }
    return pmf;
}

double pa_tau(std::uint32_t m, double delta) {
    validate_params(m, delta);
    return 3.0 + delta / static_cast<double>(m);
}

double pa_c(std::uint32_t m, double delta) {
    validate_params(m, delta);
    const double md = static_cast<double>(m);
    const double ratio = delta / md;
    return (2.0 + ratio) *
           std::exp(log_gamma(md + 2.0 + delta + ratio) - log_gamma(md + delta));
}

double pa_expected_degree(std::uint32_t m, double delta, std::uint64_t i, std::uint64_t n) {
    validate_params(m, delta);
    validate_node(i, n);
    const double a = static_cast<double>(m) / (2.0 * m + delta);
    const double id = static_cast<double>(i);
    const double nd = static_cast<double>(n);
    // Grouped as two log-Gamma differences so the i == n case cancels exactly.
    const double growth = std::exp((log_gamma(nd + a) - log_gamma(id + a)) -
                                   (log_gamma(nd) - log_gamma(id)));
    return shifted_start(m, delta, i) * growth - delta;
}

double PaMoments::c_coeff(std::uint64_t j) const {
    const double s = (2.0 * m + delta) * static_cast<double>(j);
    return static_cast<double>(m) / (s * s);
}

double PaMoments::d_coeff(std::uint64_t j) const {
    const double r = 1.0 + static_cast<double>(m) / ((2.0 * m + delta) * static_cast<double>(j));
    return r * r;
}

double PaMoments::expected_degree(std::uint64_t i, std::uint64_t n) const {
    return pa_expected_degree(m, delta, i, n);
}

// Closed form:
//   Var = E_i [ prod_{j=i}^{n-1} (d_j - c_j)  -  prod_{j=i}^{n-1} d_j ]
//         + sum_{j=i}^{n-1} D_j sqrt(m c_j) prod_{k=j+1}^{n-1} (d_k - c_k)
// with E_i = (m + [i==1] m + delta)^2, D_j = E(D^j(i) + delta), and
// sqrt(m c_j) = m / ((2m+delta) j).
double PaMoments::variance(std::uint64_t i, std::uint64_t n) const {
    validate_params(m, delta);
    validate_node(i, n);
    if (i == n) return 0.0;

    // Suffix products of (d_j - c_j) over j = i..n-1; suffix[j - i] covers j..n-1.
    const std::size_t steps = static_cast<std::size_t>(n - i);
    std::vector<double> suffix(steps + 1, 1.0);
    for (std::uint64_t j = n - 1; j >= i; --j) {
        suffix[j - i] = (d_coeff(j) - c_coeff(j)) * suffix[j - i + 1];
        if (j == i) break;
    }
    double d_product = 1.0;
    for (std::uint64_t j = i; j <= n - 1; ++j) d_product *= d_coeff(j);

    const double start = shifted_start(m, delta, i);
    const double a = static_cast<double>(m) / (2.0 * m + delta);

    double sum = 0.0;
    double shifted_mean = start;  // D_j, advanced by (j + a)/j per step
    for (std::uint64_t j = i; j <= n - 1; ++j) {
        const double root = static_cast<double>(m) / ((2.0 * m + delta) * static_cast<double>(j));
        sum += shifted_mean * root * suffix[j - i + 1];
        shifted_mean *= (static_cast<double>(j) + a) / static_cast<double>(j);
    }
    return start * start * (suffix[0] - d_product) + sum;
}

// Step recursion with V_i = 0, E_i = (m + [i==1] m + delta)^2:
//   V_{j+1} = -E_j c_j + D_j sqrt(m c_j) + V_j d_j
//   E_{j+1} =  E_j (d_j - c_j) + D_j sqrt(m c_j)
double PaMoments::variance_by_recursion(std::uint64_t i, std::uint64_t n) const {
    validate_params(m, delta);
    validate_node(i, n);
    const double start = shifted_start(m, delta, i);
    const double a = static_cast<double>(m) / (2.0 * m + delta);

    double variance = 0.0;
    double second_moment = start * start;
    double shifted_mean = start;
    for (std::uint64_t j = i; j <= n - 1; ++j) {
        const double c = c_coeff(j);
        const double d = d_coeff(j);
        const double root = static_cast<double>(m) / ((2.0 * m + delta) * static_cast<double>(j));
        const double next_variance = -second_moment * c + shifted_mean * root + variance * d;
        const double next_second = second_moment * (d - c) + shifted_mean * root;
        variance = next_variance;
        second_moment = next_second;
        shifted_mean *= (static_cast<double>(j) + a) / static_cast<double>(j);
    }
    return variance;
}

double pa_degree_variance(std::uint32_t m, double delta, std::uint64_t i, std::uint64_t n) {
    return PaMoments{m, delta}.variance(i, n);
}

double pa_degree_variance_recursion(std::uint32_t m, double delta, std::uint64_t i,
                                    std::uint64_t n) {
    return PaMoments{m, delta}.variance_by_recursion(i, n);
}

}  // namespace graphlab
