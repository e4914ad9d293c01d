#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "graphlab/special_functions.hpp"
#include "graphlab/stats.hpp"

using namespace graphlab;

TEST_CASE("log_gamma and ratios") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-12));
    // Gamma(1000.4)/Gamma(1000) stays finite in log space.
    const double r = log_gamma_ratio(1000.4, 1000.0);
    CHECK(std::exp(r) == doctest::Approx(std::pow(1000.0, 0.4)).epsilon(1e-3));
    CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
}

TEST_CASE("log_choose against exact small values") {
    CHECK(std::exp(log_choose(10, 3)) == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(std::exp(log_choose(52, 5)) == doctest::Approx(2598960.0).epsilon(1e-10));
    CHECK(log_choose(7, 0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(log_choose(3, 4), std::invalid_argument);
}

TEST_CASE("regularized gamma: complements and bounds") {
    for (double a : {0.5, 1.0, 3.5, 40.0}) {
        for (double x : {0.0, 0.3, 1.0, 5.0, 60.0}) {
            const double p = regularized_gamma_p(a, x);
            const double q = regularized_gamma_q(a, x);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK(regularized_gamma_p(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("chi-square p-values: standard table points") {
    // Classic critical values: P(X >= crit) at the named levels.
    CHECK(chi_square_pvalue(3.841, 1) == doctest::Approx(0.05).epsilon(1e-3));
    CHECK(chi_square_pvalue(6.635, 1) == doctest::Approx(0.01).epsilon(1e-3));
    CHECK(chi_square_pvalue(14.067, 7) == doctest::Approx(0.05).epsilon(1e-3));
    CHECK(chi_square_pvalue(20.090, 8) == doctest::Approx(0.01).epsilon(1e-3));
    CHECK(chi_square_pvalue(23.209, 10) == doctest::Approx(0.01).epsilon(1e-3));
    CHECK(chi_square_pvalue(0.0, 5) == 1.0);
}

TEST_CASE("chi_square_gof: perfect and gross misfits") {
    // Perfectly uniform counts fit the uniform pmf.
    std::vector<std::uint64_t> flat(10, 100);
    const auto good = chi_square_gof(flat, [](std::size_t k) { return k < 10 ? 0.1 : 0.0; });
    CHECK(good.statistic == doctest::Approx(0.0));
    CHECK(good.p_value == doctest::Approx(1.0));

    // Heavily skewed counts do not.
    std::vector<std::uint64_t> skew{900, 10, 10, 10, 10, 10, 10, 10, 10, 20};
    const auto bad = chi_square_gof(skew, [](std::size_t k) { return k < 10 ? 0.1 : 0.0; });
    CHECK(bad.p_value < 1e-6);
}

TEST_CASE("chi_square_gof: pooling keeps expected counts above the floor") {
    // A long sparse tail gets pooled instead of inflating the statistic.
    std::vector<std::uint64_t> obs(50, 0);
    obs[0] = 70;
    obs[1] = 25;
    obs[2] = 5;
    const auto res = chi_square_gof(obs, [](std::size_t k) {
        return std::pow(0.3, static_cast<double>(k)) * 0.7;
    });
    CHECK(res.bins >= 2);
    CHECK(res.bins <= 4);
    CHECK(res.p_value > 0.0);
}

TEST_CASE("chi_square_two_sample: identical and disjoint histograms") {
    std::vector<std::uint64_t> a{50, 60, 70, 40, 30};
    const auto same = chi_square_two_sample(a, a);
    CHECK(same.statistic == doctest::Approx(0.0));
    CHECK(same.p_value == doctest::Approx(1.0));

    std::vector<std::uint64_t> b{0, 0, 0, 125, 125};
    const auto diff = chi_square_two_sample(a, b);
    CHECK(diff.p_value < 1e-6);
}

TEST_CASE("bootstrap variance stderr: sane scale and determinism") {
    std::vector<double> xs;
    Summary ref;
    {
        // Fixed pseudo-sample with known spread.
        for (int i = 0; i < 400; ++i) xs.push_back(static_cast<double>(i % 20));
        ref = summarize(xs);
    }
    const double se1 = bootstrap_variance_stderr(xs, 300, 9);
    const double se2 = bootstrap_variance_stderr(xs, 300, 9);
    CHECK(se1 == se2);
    CHECK(se1 > 0.0);
    // Within an order of magnitude of the normal-theory approximation.
    const double normal_theory = ref.variance * std::sqrt(2.0 / (xs.size() - 1));
    CHECK(se1 < 5.0 * normal_theory);
    CHECK(se1 > normal_theory / 5.0);
}
