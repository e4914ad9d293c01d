#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphlab/generators.hpp"
#include "graphlab/pa_theory.hpp"
#include "graphlab/stats.hpp"

using namespace graphlab;

TEST_CASE("limit pmf: closed form for m = 1, delta = 0 is 4/(k(k+1)(k+2))") {
    CHECK(pa_limit_pmf(1, 0.0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(pa_limit_pmf(1, 0.0, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(pa_limit_pmf(1, 0.0, 3) == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    for (std::uint64_t k = 1; k <= 100; ++k) {
        const double kd = static_cast<double>(k);
        const double expected = 4.0 / (kd * (kd + 1.0) * (kd + 2.0));
        CHECK(pa_limit_pmf(1, 0.0, k) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("limit pmf: zero below m, positive from m on") {
    for (const auto& [m, delta] :
         std::vector<std::pair<std::uint32_t, double>>{{1, 0.0}, {2, 0.0}, {3, 1.5}, {2, -1.5}}) {
        for (std::uint64_t k = 0; k < m; ++k) CHECK(pa_limit_pmf(m, delta, k) == 0.0);
        CHECK(pa_limit_pmf(m, delta, m) > 0.0);
    }
    CHECK_THROWS_AS(pa_limit_pmf(0, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(pa_limit_pmf(2, -2.0, 3), std::invalid_argument);
}

TEST_CASE("limit pmf: recurrence table matches the direct evaluation") {
    for (const auto& [m, delta] :
         std::vector<std::pair<std::uint32_t, double>>{{1, 0.0}, {2, 1.0}, {3, -2.5}}) {
        const auto table = pa_limit_pmf_table(m, delta, 500);
        for (std::uint64_t k = 0; k <= 500; k += 7)
            CHECK(table[k] == doctest::Approx(pa_limit_pmf(m, delta, k)).epsilon(1e-12));
    }
}

TEST_CASE("limit pmf: partial sums increase toward total mass one") {
    for (const auto& [m, delta] : std::vector<std::pair<std::uint32_t, double>>{
             {1, 0.0}, {2, 0.0}, {2, 1.0}, {1, -0.5}}) {
        const auto table = pa_limit_pmf_table(m, delta, 1000000);
        double sum = 0.0;
        double prev = -1.0;
        for (std::uint64_t k = 0; k < table.size(); k += 1) {
            CHECK(table[k] >= 0.0);
            sum += table[k];
            if (k % 100000 == 0) {
                CHECK(sum >= prev);
                prev = sum;
            }
        }
        CHECK(sum >= 1.0 - 1e-4);
        CHECK(sum <= 1.0 + 1e-9);
    }
}

TEST_CASE("tau and c: substitution values") {
    CHECK(pa_tau(2, 0.0) == 3.0);
    CHECK(pa_tau(1, 1.0) == 4.0);
    CHECK(pa_tau(2, -1.0) == 2.5);
    // c for m = 1, delta = 0: 2 * Gamma(3) / Gamma(1) = 4.
    CHECK(pa_c(1, 0.0) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("tau and c describe the pmf tail") {
    for (const auto& [m, delta] :
         std::vector<std::pair<std::uint32_t, double>>{{1, 0.0}, {2, 0.0}, {2, 1.0}}) {
        const double k = 1e4;
        const double approx = pa_c(m, delta) * std::pow(k, -pa_tau(m, delta));
        const double ratio = pa_limit_pmf(m, delta, 10000) / approx;
        CHECK(std::fabs(ratio - 1.0) < 0.05);
    }
}

TEST_CASE("expected degree: boundary nodes") {
    for (const auto& [m, delta] :
         std::vector<std::pair<std::uint32_t, double>>{{1, 0.0}, {2, 0.5}, {3, -1.5}}) {
        // Just-added node i = n (i >= 2): degree is exactly m.
        CHECK(pa_expected_degree(m, delta, 50, 50) == doctest::Approx(m).epsilon(1e-12));
        // The initial node at time 1 carries its m self-loops: degree 2m.
        CHECK(pa_expected_degree(m, delta, 1, 1) == doctest::Approx(2.0 * m).epsilon(1e-12));
    }
    CHECK_THROWS_AS(pa_expected_degree(2, 0.0, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(pa_expected_degree(2, 0.0, 11, 10), std::invalid_argument);
}

TEST_CASE("expected degree: hand-derived small case") {
    // m = 1, delta = 0: node 2 attaches to node 1 surely, then node 3 picks
    // node 1 with probability 3/4, so E(D^3(1)) = 3.75.
    CHECK(pa_expected_degree(1, 0.0, 1, 2) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(pa_expected_degree(1, 0.0, 1, 3) == doctest::Approx(3.75).epsilon(1e-12));
}

TEST_CASE("expected degree: monotone non-increasing in i, sum equals 2mn") {
    const std::uint64_t n = 1000;
    double prev = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const double e = pa_expected_degree(2, 0.0, i, n);
        CHECK(e <= prev + 1e-12);
        prev = e;
        sum += e;
    }
    CHECK(std::fabs(sum / (2.0 * 2.0 * n) - 1.0) <= 1e-6);
}

TEST_CASE("expected degree: monte carlo agreement") {
    const std::uint32_t m = 2;
    const std::uint64_t n = 50;
    const std::size_t replicas = 400;
    for (const std::uint64_t i : {1ull, 10ull, 50ull}) {
        std::vector<double> degrees;
        degrees.reserve(replicas);
        for (std::size_t r = 0; r < replicas; ++r) {
            const PaTrace t = generate_pa(PaParams{n, m, 0.0, 90000 + r});
            degrees.push_back(t.graph.degree(static_cast<NodeId>(i)));
        }
        const Summary s = summarize(degrees);
        const double expected = pa_expected_degree(m, 0.0, i, n);
        CHECK(std::fabs(s.mean - expected) <= 3.0 * s.std_error + 1e-12);
    }
}

TEST_CASE("variance: zero at i = n and for the forced first attachment") {
    CHECK(pa_degree_variance(2, 0.0, 30, 30) == 0.0);
    CHECK(pa_degree_variance_recursion(2, 0.0, 30, 30) == 0.0);
    // m = 1, delta = 0, i = 1, n = 2: the single outcome D^2(1) = 3.
    CHECK(pa_degree_variance(1, 0.0, 1, 2) == doctest::Approx(0.0));
    CHECK(pa_degree_variance_recursion(1, 0.0, 1, 2) == doctest::Approx(0.0));
}

TEST_CASE("variance: exhaustive three-node enumeration") {
    // m = 1, delta = 0: D^3(1) is 4 with probability 3/4 and 3 with 1/4,
    // so Var = (3/4)(1/4) = 0.1875.
    CHECK(pa_degree_variance(1, 0.0, 1, 3) == doctest::Approx(0.1875).epsilon(1e-12));
    CHECK(pa_degree_variance_recursion(1, 0.0, 1, 3) == doctest::Approx(0.1875).epsilon(1e-12));
}

TEST_CASE("variance: closed form equals the step recursion to 1e-12") {
    for (const std::uint32_t m : {1u, 2u, 3u})
        for (const double delta : {0.0, 1.0, -0.5})
            for (const std::uint64_t i : {1ull, 2ull, 7ull, 50ull, 199ull})
                for (const std::uint64_t n : {200ull, 500ull}) {
                    const double closed = pa_degree_variance(m, delta, i, n);
                    const double stepped = pa_degree_variance_recursion(m, delta, i, n);
                    if (closed == 0.0)
                        CHECK(stepped == 0.0);
                    else
                        CHECK(std::fabs(closed / stepped - 1.0) <= 1e-12);
                }
}

TEST_CASE("variance: coefficient functions") {
    const PaMoments pm{2, 1.0};  // 2m + delta = 5
    CHECK(pm.c_coeff(3) == doctest::Approx(2.0 / 225.0).epsilon(1e-12));
    const double r = 1.0 + 2.0 / 15.0;
    CHECK(pm.d_coeff(3) == doctest::Approx(r * r).epsilon(1e-12));
    CHECK(pm.c_coeff(1) > 0.0);
    CHECK(pm.d_coeff(1) > 1.0);
}

TEST_CASE("variance: monte carlo agreement with bootstrap error bars") {
    const std::uint32_t m = 2;
    const std::uint64_t n = 100;
    const std::size_t replicas = 800;
    for (const std::uint64_t i : {1ull, 20ull}) {
        std::vector<double> degrees;
        degrees.reserve(replicas);
        for (std::size_t r = 0; r < replicas; ++r) {
            const PaTrace t = generate_pa(PaParams{n, m, 0.0, 50000 + r});
            degrees.push_back(t.graph.degree(static_cast<NodeId>(i)));
        }
        const double sample_var = summarize(degrees).variance;
        const double se = bootstrap_variance_stderr(degrees, 500, 123);
        const double theory = pa_degree_variance(m, 0.0, i, n);
        CHECK(std::fabs(sample_var - theory) <= 3.0 * se);
    }
}
