#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "graphlab/degree_stats.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/rng.hpp"

using namespace graphlab;

TEST_CASE("histogram: examples") {
    CHECK(histogram(WeightedGraph(3, {})).counts == std::vector<std::uint64_t>{3});

    const WeightedGraph k4 = generate_er(ErParams{4, 1.0, 1});
    const DegreeHistogram hk4 = histogram(k4);
    CHECK(hk4.count(3) == 4);
    CHECK(hk4.n == 4);

    const WeightedGraph path(3, {Edge{1, 2, 1}, Edge{2, 3, 1}});
    const DegreeHistogram hp = histogram(path);
    CHECK(hp.count(1) == 2);
    CHECK(hp.count(2) == 1);
}

TEST_CASE("histogram: rejects non-integer node weights") {
    const WeightedGraph g(2, {Edge{1, 2, 2.5}});
    CHECK_THROWS_AS(histogram(g), std::invalid_argument);
    // The simple view does not care about weights.
    CHECK(histogram(g, DegreeView::simple).count(1) == 2);
}

TEST_CASE("histogram: multiplicity vs simple view on pa output") {
    const PaTrace t = generate_pa(PaParams{100, 3, 0.0, 4});
    const DegreeHistogram multi = histogram(t.graph);
    const DegreeHistogram simple = histogram(t.graph, DegreeView::simple);
    CHECK(multi.n == simple.n);
    // Multiplicity view counts parallel edges and node 1's loops, so its mean
    // is exactly 2m while the simple mean is strictly smaller.
    CHECK(multi.mean() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(simple.mean() < multi.mean());
}

TEST_CASE("histogram: ccdf is the suffix sum") {
    const WeightedGraph path(3, {Edge{1, 2, 1}, Edge{2, 3, 1}});
    const auto tail = histogram(path).ccdf();
    // degrees 1, 2, 1 -> N_{>=0} = 3, N_{>=1} = 3, N_{>=2} = 1, N_{>=3} = 0.
    CHECK(tail == std::vector<std::uint64_t>{3, 3, 1, 0});
}

TEST_CASE("binomial_pmf: trivial and domain cases") {
    CHECK(binomial_pmf(17, 0.0, 0) == 1.0);
    CHECK(binomial_pmf(17, 0.0, 3) == 0.0);
    CHECK(binomial_pmf(17, 1.0, 17) == 1.0);
    CHECK_THROWS_AS(binomial_pmf(5, 0.5, 6), std::invalid_argument);
    CHECK_THROWS_AS(binomial_pmf(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("binomial_pmf: brute-force enumeration oracle at n = 10") {
    // Sum Bernoulli outcomes over all 2^10 assignments.
    const double p = 0.3;
    std::vector<double> exact(11, 0.0);
    for (unsigned mask = 0; mask < 1024; ++mask) {
        const int ones = std::popcount(mask);
        exact[ones] += std::pow(p, ones) * std::pow(1.0 - p, 10 - ones);
    }
    for (std::uint64_t l = 0; l <= 10; ++l)
        CHECK(binomial_pmf(10, p, l) == doctest::Approx(exact[l]).epsilon(1e-12));
}

TEST_CASE("binomial_pmf: mass sums to one, mean matches") {
    double sum = 0.0, mean = 0.0;
    for (std::uint64_t l = 0; l <= 999; ++l) {
        const double v = binomial_pmf(999, 0.005, l);
        sum += v;
        mean += static_cast<double>(l) * v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mean == doctest::Approx(4.995).epsilon(1e-10));
}

TEST_CASE("binomial_pmf_table agrees with the log-space evaluation") {
    for (const auto& [n, p] : std::vector<std::pair<std::uint64_t, double>>{
             {999, 0.01}, {499, 0.01}, {50, 0.4}, {10, 0.0}, {10, 1.0}}) {
        const auto table = binomial_pmf_table(n, p);
        REQUIRE(table.size() == n + 1);
        for (std::uint64_t l = 0; l <= n; ++l)
            CHECK(table[l] == doctest::Approx(binomial_pmf(n, p, l)).epsilon(1e-10));
    }
}

TEST_CASE("node sampler deviation curve spot values") {
    const auto curve = node_sampler_binomial_deviation(1000, 0.01);
    REQUIRE(curve.size() == 1000);
    // m = 1: Bin(0, p) is a point mass at 0; the deviation is 1 - (1-p)^999
    // at l = 0 versus that point mass.
    CHECK(curve[0] ==
          doctest::Approx(1.0 - binomial_pmf(999, 0.00001, 0)).epsilon(1e-9));
    CHECK(curve[999] == 0.0);
    CHECK(binomial_max_abs_diff(93, 0.01, 999, 0.01 * 94.0 / 1000.0) ==
          doctest::Approx(curve[93]).epsilon(1e-12));
}

TEST_CASE("fit_power_law: synthetic exact cubic power-law tail") {
    // Inverse-cdf samples from p(k) proportional to k^-3 on k >= 5.
    const std::size_t kmax = 1000000;
    std::vector<double> cum;
    cum.reserve(kmax - 4);
    double total = 0.0;
    for (std::size_t k = 5; k <= kmax; ++k) {
        const double kd = static_cast<double>(k);
        total += 1.0 / (kd * kd * kd);
        cum.push_back(total);
    }
    Rng rng(11);
    DegreeHistogram h;
    h.n = 100000;
    for (std::size_t i = 0; i < h.n; ++i) {
        const double u = rng.next_double() * total;
        const std::size_t k = 5 + static_cast<std::size_t>(
                                      std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
        if (k >= h.counts.size()) h.counts.resize(k + 1, 0);
        ++h.counts[k];
    }
    const PowerLawFit fit = fit_power_law(h, 5);
    CHECK(fit.k_min == 5);
    CHECK(fit.n_tail == h.n);
    CHECK(std::fabs(fit.tau - 3.0) <= 0.05);
    CHECK(std::fabs(fit.tau - 3.0) / 3.0 <= 0.02);
}

TEST_CASE("fit_power_law: default k_min and error paths") {
    DegreeHistogram h;
    h.counts = {5, 0, 10, 3, 2};  // smallest positive degree with mass: 2
    h.n = 20;
    const PowerLawFit fit = fit_power_law(h);
    CHECK(fit.k_min == 2);
    CHECK(fit.n_tail == 15);
    CHECK(fit.tau > 1.0);

    DegreeHistogram empty;
    empty.counts = {7};
    empty.n = 7;
    CHECK_THROWS_AS(fit_power_law(empty), std::invalid_argument);

    // All tail degrees equal k_min: degenerate.
    const WeightedGraph k4 = generate_er(ErParams{4, 1.0, 1});
    CHECK_THROWS_AS(fit_power_law(histogram(k4), 3), std::invalid_argument);

    DegreeHistogram thin;
    thin.counts = {0, 0, 0, 1};
    thin.n = 1;
    CHECK_THROWS_AS(fit_power_law(thin, 3), std::invalid_argument);
}

TEST_CASE("fit_power_law: pa sample lands in the loose scale-free window") {
    const PaTrace t = generate_pa(PaParams{1000, 2, 0.0, 1});
    const PowerLawFit fit = fit_power_law(histogram(t.graph), 6);
    CHECK(fit.tau > 2.5);
    CHECK(fit.tau < 3.5);
}
