#include "graphlab/degree_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graphlab/special_functions.hpp"

namespace graphlab {

double DegreeHistogram::pmf(std::size_t k) const {
    if (n == 0) return 0.0;
    return static_cast<double>(count(k)) / static_cast<double>(n);
}

double DegreeHistogram::mean() const {
    if (n == 0) return 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k)
        s += static_cast<double>(k) * static_cast<double>(counts[k]);
    return s / static_cast<double>(n);
}

std::vector<std::uint64_t> DegreeHistogram::ccdf() const {
    std::vector<std::uint64_t> tail(counts.size() + 1, 0);
    for (std::size_t s = counts.size(); s-- > 0;) tail[s] = tail[s + 1] + counts[s];
    return tail;
}

void DegreeHistogram::merge(const DegreeHistogram& other) {
    if (other.counts.size() > counts.size()) counts.resize(other.counts.size(), 0);
    for (std::size_t k = 0; k < other.counts.size(); ++k) counts[k] += other.counts[k];
    n += other.n;
}

DegreeHistogram histogram(const WeightedGraph& g, DegreeView view) {
    DegreeHistogram h;
    h.n = g.node_count();
    for (NodeId x = 1; x <= g.node_count(); ++x) {
        std::uint64_t k = 0;
        if (view == DegreeView::multiplicity) {
            const double mu = g.degree(x);
            const double rounded = std::round(mu);
            if (std::fabs(mu - rounded) > 1e-9)
                throw std::invalid_argument(
                    "histogram: non-integer node weight; integer-degree statistics apply to "
                    "unit- or multiplicity-weighted graphs only");
            k = static_cast<std::uint64_t>(rounded);
        } else {
            for (const auto& [y, c] : g.neighbors(x))
                if (y != x) ++k;
        }
        if (k >= h.counts.size()) h.counts.resize(k + 1, 0);
        ++h.counts[k];
    }
    return h;
}

PowerLawFit fit_power_law(const DegreeHistogram& h, std::optional<std::uint64_t> k_min_opt) {
    std::uint64_t k_min = 0;
    if (k_min_opt) {
        k_min = *k_min_opt;
        if (k_min < 1) throw std::invalid_argument("fit_power_law: k_min must be >= 1");
    } else {
        for (std::size_t k = 1; k < h.counts.size(); ++k)
            if (h.counts[k] > 0) {
                k_min = k;
                break;
            }
        if (k_min == 0) throw std::invalid_argument("fit_power_law: no node of positive degree");
    }

    std::uint64_t n_tail = 0;
    double log_sum = 0.0;
    const double base = static_cast<double>(k_min) - 0.5;
    for (std::size_t k = k_min; k < h.counts.size(); ++k) {
        if (h.counts[k] == 0) continue;
        n_tail += h.counts[k];
        log_sum += static_cast<double>(h.counts[k]) * std::log(static_cast<double>(k) / base);
    }
    if (n_tail < 2) throw std::invalid_argument("fit_power_law: empty tail (need >= 2 nodes at or above k_min)");
    if (h.count(k_min) == n_tail)
        throw std::invalid_argument("fit_power_law: degenerate tail (all degrees equal k_min)");

    PowerLawFit fit;
    fit.k_min = k_min;
    fit.n_tail = n_tail;
    fit.tau = 1.0 + static_cast<double>(n_tail) / log_sum;
    return fit;
}

double binomial_pmf(std::uint64_t n_trials, double p, std::uint64_t l) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_pmf: need p in [0, 1]");
    if (l > n_trials) throw std::invalid_argument("binomial_pmf: need l <= n_trials");
    if (p == 0.0) return l == 0 ? 1.0 : 0.0;
    if (p == 1.0) return l == n_trials ? 1.0 : 0.0;
    const double logp = log_choose(n_trials, l) + static_cast<double>(l) * std::log(p) +
                        static_cast<double>(n_trials - l) * std::log1p(-p);
    return std::exp(logp);
}

std::vector<double> binomial_pmf_table(std::uint64_t n_trials, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binomial_pmf_table: need p in [0, 1]");
    std::vector<double> pmf(n_trials + 1, 0.0);
    if (p == 0.0) {
        pmf[0] = 1.0;
        return pmf;
    }
    if (p == 1.0) {
        pmf[n_trials] = 1.0;
        return pmf;
    }
    // pmf(l+1)/pmf(l) = (n-l)/(l+1) * p/(1-p), seeded at l = 0 in log space.
    pmf[0] = std::exp(static_cast<double>(n_trials) * std::log1p(-p));
    const double odds = p / (1.0 - p);
    for (std::uint64_t l = 0; l < n_trials; ++l)
        pmf[l + 1] = pmf[l] * odds * static_cast<double>(n_trials - l) /
                     static_cast<double>(l + 1);
    return pmf;
}

double binomial_max_abs_diff(std::uint64_t n1, double p1, std::uint64_t n2, double p2) {
    const std::vector<double> a = binomial_pmf_table(n1, p1);
    const std::vector<double> b = binomial_pmf_table(n2, p2);
    const std::size_t len = std::max(a.size(), b.size());
    double worst = 0.0;
    for (std::size_t l = 0; l < len; ++l) {
        const double va = l < a.size() ? a[l] : 0.0;
        const double vb = l < b.size() ? b[l] : 0.0;
        worst = std::max(worst, std::fabs(va - vb));
    }
    return worst;
}

std::vector<double> node_sampler_binomial_deviation(NodeId n, double p) {
    if (n < 1) throw std::invalid_argument("node_sampler_binomial_deviation: need n >= 1");
    std::vector<double> out;
    out.reserve(n);
    for (NodeId m = 1; m <= n; ++m)
        out.push_back(binomial_max_abs_diff(m - 1, p, n - 1,
                                            p * static_cast<double>(m) / static_cast<double>(n)));
    return out;
}

}  // namespace graphlab
