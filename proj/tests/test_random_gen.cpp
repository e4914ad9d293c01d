#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "graphlab/degree_stats.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/graph_io.hpp"
#include "graphlab/rng.hpp"
#include "graphlab/stats.hpp"

using namespace graphlab;

TEST_CASE("rng: determinism and stream separation") {
    Rng a(42), b(42), c(43), d(42, 1);
    bool all_equal = true, differs_seed = false, differs_stream = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        all_equal &= (va == b.next_u64());
        differs_seed |= (va != c.next_u64());
        differs_stream |= (va != d.next_u64());
    }
    CHECK(all_equal);
    CHECK(differs_seed);
    CHECK(differs_stream);
}

TEST_CASE("rng: next_double in [0,1), next_below unbiased") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    // 6-sided outcome counts vs the uniform law.
    std::vector<std::uint64_t> counts(6, 0);
    for (int i = 0; i < 60000; ++i) ++counts[rng.next_below(6)];
    const auto gof = chi_square_gof(counts, [](std::size_t k) { return k < 6 ? 1.0 / 6.0 : 0.0; });
    CHECK(gof.p_value > 0.01);
}

TEST_CASE("er: degenerate probabilities") {
    const WeightedGraph empty = generate_er(ErParams{5, 0.0, 1});
    CHECK(empty.node_count() == 5);
    CHECK(empty.edge_count() == 0);

    const WeightedGraph k5 = generate_er(ErParams{5, 1.0, 1});
    CHECK(k5.edge_count() == 10);
    for (NodeId x = 1; x <= 5; ++x) CHECK(k5.degree(x) == 4.0);
}

TEST_CASE("er: invalid parameters") {
    CHECK_THROWS_AS(generate_er(ErParams{0, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_er(ErParams{5, 1.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_er(ErParams{5, -0.1, 1}), std::invalid_argument);
}

TEST_CASE("er: same seed gives the identical edge multiset") {
    const WeightedGraph a = generate_er(ErParams{300, 0.05, 1234});
    const WeightedGraph b = generate_er(ErParams{300, 0.05, 1234});
    const WeightedGraph c = generate_er(ErParams{300, 0.05, 1235});
    CHECK(format_graph(a) == format_graph(b));
    CHECK(format_graph(a) != format_graph(c));
}

TEST_CASE("er: edge count distributed as Bin(n(n-1)/2, p) over seeds") {
    // n = 30 gives 435 possible pairs; pool edge counts of 300 seeded runs.
    const std::uint64_t pairs = 435;
    const double p = 0.1;
    std::vector<std::uint64_t> counts(120, 0);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const WeightedGraph g = generate_er(ErParams{30, p, seed});
        REQUIRE(g.edge_count() < counts.size());
        ++counts[g.edge_count()];
    }
    const auto gof = chi_square_gof(
        counts, [&](std::size_t k) { return k <= pairs ? binomial_pmf(pairs, p, k) : 0.0; });
    CHECK(gof.p_value > 0.01);
}

TEST_CASE("er: marginal degree of node 1 is Bin(n-1, p) over seeds") {
    const double p = 0.2;
    std::vector<std::uint64_t> counts(50, 0);
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const WeightedGraph g = generate_er(ErParams{50, p, seed});
        ++counts[static_cast<std::size_t>(g.degree(1))];
    }
    const auto gof = chi_square_gof(
        counts, [&](std::size_t k) { return k <= 49 ? binomial_pmf(49, p, k) : 0.0; });
    CHECK(gof.p_value > 0.01);
}

TEST_CASE("er: empirical mean degree approaches (n-1)p") {
    // Fig-scale parameters: n = 1000, p = 1/100, lambda = 9.99.
    std::vector<double> means;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const WeightedGraph g = generate_er(ErParams{1000, 0.01, seed});
        means.push_back(histogram(g).mean());
    }
    const Summary s = summarize(means);
    CHECK(std::fabs(s.mean - 9.99) <= 3.0 * s.std_error);
}

TEST_CASE("pa: initialization is one node with m self-loops") {
    const PaTrace t = generate_pa(PaParams{1, 3, 0.5, 9});
    CHECK(t.graph.node_count() == 1);
    CHECK(t.graph.edge_count() == 1);
    CHECK(t.graph.degree(1) == 6.0);  // 2m
    CHECK(t.graph.allows_self_loops());
}

TEST_CASE("pa: invalid parameters") {
    CHECK_THROWS_AS(generate_pa(PaParams{10, 0, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_pa(PaParams{10, 2, -2.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_pa(PaParams{0, 1, 0.0, 1}), std::invalid_argument);
}

TEST_CASE("pa: node 2 must attach to node 1") {
    const PaTrace t = generate_pa(PaParams{2, 1, 0.0, 77});
    CHECK(t.graph.degree(1) == 3.0);  // self-loop (2) + the forced edge
    CHECK(t.graph.degree(2) == 1.0);
}

TEST_CASE("pa: degree sum is exactly 2mn and stripping leaves a connected graph") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        for (const auto& [m, delta] : std::vector<std::pair<std::uint32_t, double>>{
                 {1, 0.0}, {2, 0.0}, {2, 1.5}, {3, -2.5}}) {
            const NodeId n = 200;
            const PaTrace t = generate_pa(PaParams{n, m, delta, seed});
            double sum = 0.0;
            for (NodeId x = 1; x <= n; ++x) sum += t.graph.degree(x);
            CHECK(sum == 2.0 * m * n);
            CHECK(t.graph.strip_self_loops().is_connected());
        }
    }
}

TEST_CASE("pa: determinism") {
    const PaTrace a = generate_pa(PaParams{500, 2, 0.5, 31});
    const PaTrace b = generate_pa(PaParams{500, 2, 0.5, 31});
    const PaTrace c = generate_pa(PaParams{500, 2, 0.5, 32});
    CHECK(format_graph(a.graph) == format_graph(b.graph));
    CHECK(format_graph(a.graph) != format_graph(c.graph));
}

TEST_CASE("pa: tracked degree histories") {
    const NodeId n = 50;
    const std::uint32_t m = 2;
    const std::vector<NodeId> tracked{1, 10};
    const PaTrace t = generate_pa(PaParams{n, m, 0.0, 5}, tracked);

    // One sample per tracked node per step where it exists.
    std::map<NodeId, std::vector<DegreeSample>> by_node;
    for (const DegreeSample& s : t.degree_history) by_node[s.node].push_back(s);
    CHECK(by_node[1].size() == n);
    CHECK(by_node[10].size() == n - 9);

    // Histories are non-decreasing and end at the final degrees.
    for (const auto& [node, samples] : by_node) {
        for (std::size_t i = 1; i < samples.size(); ++i) {
            CHECK(samples[i].time == samples[i - 1].time + 1);
            CHECK(samples[i].degree >= samples[i - 1].degree);
        }
        CHECK(static_cast<double>(samples.back().degree) == t.graph.degree(node));
    }
    CHECK(by_node[1].front().degree == 2 * m);
    CHECK(by_node[10].front().degree == m);
}

TEST_CASE("pa: multi-edges are possible and recorded as integer multiplicities") {
    // With m = 3 and few nodes, repeated draws of the same target are common.
    bool found_parallel = false;
    for (std::uint64_t seed = 1; seed <= 20 && !found_parallel; ++seed) {
        const PaTrace t = generate_pa(PaParams{30, 3, 0.0, seed});
        for (const Edge& e : t.graph.edges())
            if (e.x != e.y && e.c > 1.0) found_parallel = true;
    }
    CHECK(found_parallel);
}
