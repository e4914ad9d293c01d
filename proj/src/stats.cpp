#include "graphlab/stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphlab/rng.hpp"
#include "graphlab/special_functions.hpp"

namespace graphlab {

Summary summarize(std::span<const double> values) {
    Summary s;
    s.count = values.size();
    if (s.count == 0) return s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.count);
    if (s.count >= 2) {
        double ss = 0.0;
        for (double v : values) {
            const double d = v - s.mean;
            ss += d * d;
        }
        s.variance = ss / static_cast<double>(s.count - 1);
        s.sd = std::sqrt(s.variance);
        s.std_error = s.sd / std::sqrt(static_cast<double>(s.count));
    }
    return s;
}

namespace {

struct Bin {
    double observed = 0.0;
    double expected = 0.0;
};

ChiSquareResult finish(std::vector<Bin> bins) {
    if (bins.size() < 2)
        throw std::invalid_argument("chi-square: fewer than two bins after pooling");
    ChiSquareResult r;
    r.bins = bins.size();
    r.df = bins.size() - 1;
    for (const Bin& b : bins) {
        const double d = b.observed - b.expected;
        r.statistic += d * d / b.expected;
    }
    r.p_value = chi_square_pvalue(r.statistic, r.df);
    return r;
}

// Pool adjacent cells left to right until each expected count reaches the
// floor; a short final remainder is merged into the previous bin.
std::vector<Bin> pool(const std::vector<Bin>& cells, double min_expected) {
    std::vector<Bin> bins;
    Bin current;
    for (const Bin& c : cells) {
        current.observed += c.observed;
        current.expected += c.expected;
        if (current.expected >= min_expected) {
            bins.push_back(current);
            current = Bin{};
        }
    }
    if (current.expected > 0.0 || current.observed > 0.0) {
        if (bins.empty()) throw std::invalid_argument("chi-square: total expected count too small");
        bins.back().observed += current.observed;
        bins.back().expected += current.expected;
    }
    return bins;
}

}  // namespace

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               const std::function<double(std::size_t)>& pmf,
                               double min_expected) {
    const std::uint64_t total =
        std::accumulate(observed.begin(), observed.end(), std::uint64_t{0});
    if (total == 0) throw std::invalid_argument("chi_square_gof: no observations");
    const double n = static_cast<double>(total);

    std::vector<Bin> cells(observed.size() + 1);
    double mass = 0.0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        const double p = pmf(k);
        if (p < 0.0) throw std::invalid_argument("chi_square_gof: negative pmf value");
        mass += p;
        cells[k].observed = static_cast<double>(observed[k]);
        cells[k].expected = n * p;
    }
    // Tail mass beyond the observed range.
    cells.back().observed = 0.0;
    cells.back().expected = n * std::max(0.0, 1.0 - mass);

    return finish(pool(cells, min_expected));
}

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b,
                                      double min_combined) {
    if (a.size() != b.size())
        throw std::invalid_argument("chi_square_two_sample: length mismatch");
    const double na = static_cast<double>(
        std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
    const double nb = static_cast<double>(
        std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("chi_square_two_sample: empty sample");

    // Pool on combined counts, then compare scaled counts per pooled bin:
    // chi2 = sum (sqrt(nb/na)*Oa - sqrt(na/nb)*Ob)^2 / (Oa + Ob).
    struct Pair {
        double oa = 0.0, ob = 0.0;
    };
    std::vector<Pair> bins;
    Pair current;
    for (std::size_t k = 0; k < a.size(); ++k) {
        current.oa += static_cast<double>(a[k]);
        current.ob += static_cast<double>(b[k]);
        if (current.oa + current.ob >= min_combined) {
            bins.push_back(current);
            current = Pair{};
        }
    }
    if (current.oa + current.ob > 0.0) {
        if (bins.empty()) throw std::invalid_argument("chi_square_two_sample: too few counts");
        bins.back().oa += current.oa;
        bins.back().ob += current.ob;
    }
    if (bins.size() < 2)
        throw std::invalid_argument("chi_square_two_sample: fewer than two bins after pooling");

    const double ra = std::sqrt(nb / na);
    const double rb = std::sqrt(na / nb);
    ChiSquareResult r;
    r.bins = bins.size();
    r.df = bins.size() - 1;
    for (const Pair& p : bins) {
        const double d = ra * p.oa - rb * p.ob;
        r.statistic += d * d / (p.oa + p.ob);
    }
    r.p_value = chi_square_pvalue(r.statistic, r.df);
    return r;
}

double bootstrap_variance_stderr(std::span<const double> values,
                                 std::size_t resamples,
                                 std::uint64_t seed) {
    if (values.size() < 2)
        throw std::invalid_argument("bootstrap_variance_stderr: need at least two values");
    if (resamples < 2)
        throw std::invalid_argument("bootstrap_variance_stderr: need at least two resamples");
    Rng rng(seed);
    std::vector<double> variances(resamples);
    std::vector<double> draw(values.size());
    for (std::size_t r = 0; r < resamples; ++r) {
        for (double& v : draw) v = values[rng.next_below(values.size())];
        variances[r] = summarize(draw).variance;
    }
    // SD of the bootstrap distribution of the variance.
    const Summary s = summarize(variances);
    return s.sd;
}

}  // namespace graphlab
