// graphlab: random-graph models, subgraph sampling, random-walk/electrical
// identities, and protein mutation networks behind one command-line tool.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "graphlab/degree_stats.hpp"
#include "graphlab/electric.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/graph_io.hpp"
#include "graphlab/pa_theory.hpp"
#include "graphlab/protein.hpp"
#include "graphlab/sampling.hpp"
#include "graphlab/walks.hpp"

namespace {

using nlohmann::json;
using namespace graphlab;

constexpr const char* kSchema = "graphlab/v1";

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void emit_json(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

void note_default_seed(const CLI::Option* seed_opt, std::uint64_t seed) {
    if (seed_opt->count() == 0)
        std::cerr << "note: no --seed given, using default seed " << seed << "\n";
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::string map_csv(const std::vector<NodeId>& kept) {
    std::string csv = "new_id,old_id\n";
    for (std::size_t i = 0; i < kept.size(); ++i)
        csv += std::to_string(i + 1) + "," + std::to_string(kept[i]) + "\n";
    return csv;
}

// ---------------------------------------------------------------- gen ----

struct GenErOpts {
    NodeId nodes = 0;
    double prob = 0.0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen_er(const GenErOpts& o) {
    const WeightedGraph g = generate_er(ErParams{o.nodes, o.prob, o.seed});
    write_text(o.out, format_graph(g));
    std::cerr << "er graph: n=" << g.node_count() << " edges=" << g.edge_count() << "\n";
    return 0;
}

struct GenPaOpts {
    NodeId nodes = 0;
    std::uint32_t m = 1;
    double delta = 0.0;
    std::uint64_t seed = 1;
    bool strip = false;
    std::vector<NodeId> track;
    std::string track_out;
    std::string out;
};

int run_gen_pa(const GenPaOpts& o) {
    const PaTrace trace = generate_pa(PaParams{o.nodes, o.m, o.delta, o.seed}, o.track);
    const WeightedGraph out_graph = o.strip ? trace.graph.strip_self_loops() : trace.graph;
    write_text(o.out, format_graph(out_graph));
    if (!o.track.empty()) {
        std::string csv = "t,i,degree\n";
        for (const DegreeSample& s : trace.degree_history)
            csv += std::to_string(s.time) + "," + std::to_string(s.node) + "," +
                   std::to_string(s.degree) + "\n";
        const std::string path = o.track_out.empty() ? o.out + ".track.csv" : o.track_out;
        write_text(path, csv);
        std::cerr << "degree history: " << path << "\n";
    }
    std::cerr << "pa graph: n=" << out_graph.node_count() << " edges=" << out_graph.edge_count()
              << (o.strip ? " (self-loops stripped)" : "") << "\n";
    return 0;
}

// ------------------------------------------------------------- sample ----

struct SampleOpts {
    double q = 0.5;
    NodeId keep = 0;
    std::uint64_t seed = 1;
    std::string in;
    std::string out;
    std::string map_out;
};

int run_sample(SamplerSpec::Kind kind, const SampleOpts& o) {
    const WeightedGraph g = read_graph(o.in);
    SamplerSpec spec;
    spec.kind = kind;
    spec.q = o.q;
    spec.m_keep = o.keep;
    spec.seed = o.seed;
    const NodeSample sample = apply_sampler(g, spec);
    write_text(o.out, format_graph(sample.graph));
    if (kind != SamplerSpec::Kind::edge_bernoulli) {
        const std::string path = o.map_out.empty() ? o.out + ".map.csv" : o.map_out;
        write_text(path, map_csv(sample.kept));
        std::cerr << "kept-node mapping: " << path << "\n";
    }
    std::cerr << "subgraph: n=" << sample.graph.node_count()
              << " edges=" << sample.graph.edge_count() << "\n";
    return 0;
}

// ------------------------------------------------------------ analyze ----

struct DegreesOpts {
    std::string in;
    std::string out;
    bool ccdf = false;
    std::string view = "multiplicity";
};

int run_analyze_degrees(const DegreesOpts& o) {
    const WeightedGraph g = read_graph(o.in);
    const DegreeView view = o.view == "simple" ? DegreeView::simple : DegreeView::multiplicity;
    const DegreeHistogram h = histogram(g, view);
    const auto tail = h.ccdf();
    std::string csv = o.ccdf ? "k,count,pmf,ccdf\n" : "k,count,pmf\n";
    for (std::size_t k = 0; k < h.counts.size(); ++k) {
        csv += std::to_string(k) + "," + std::to_string(h.counts[k]) + "," +
               format_double(h.pmf(k));
        if (o.ccdf) csv += "," + std::to_string(tail[k]);
        csv += "\n";
    }
    write_text(o.out, csv);
    std::cerr << "histogram: n=" << h.n << " max degree=" << h.max_degree() << "\n";
    return 0;
}

struct PowerlawOpts {
    std::string in;
    std::uint64_t kmin = 0;
    bool kmin_set = false;
    std::string out;
};

int run_analyze_powerlaw(const PowerlawOpts& o) {
    const WeightedGraph g = read_graph(o.in);
    const PowerLawFit fit = fit_power_law(
        histogram(g), o.kmin_set ? std::optional<std::uint64_t>(o.kmin) : std::nullopt);
    emit_json(json{{"schema", kSchema},
                   {"command", "analyze powerlaw"},
                   {"tau", fit.tau},
                   {"k_min", fit.k_min},
                   {"n_tail", fit.n_tail}},
              o.out);
    return 0;
}

struct BinomDiffOpts {
    NodeId nodes = 0;
    double prob = 0.0;
    std::string out;
};

int run_analyze_binomdiff(const BinomDiffOpts& o) {
    const auto curve = node_sampler_binomial_deviation(o.nodes, o.prob);
    std::string csv = "m,max_abs_diff\n";
    for (std::size_t i = 0; i < curve.size(); ++i)
        csv += std::to_string(i + 1) + "," + format_double(curve[i]) + "\n";
    write_text(o.out, csv);
    return 0;
}

// ---------------------------------------------------------- pa theory ----

struct PaTheoryOpts {
    std::uint32_t m = 1;
    double delta = 0.0;
    std::uint64_t pmf_upto = 0;
    bool want_expected = false;
    bool want_variance = false;
    std::uint64_t node = 1;
    std::uint64_t n = 0;
    std::string curve_out;
    std::string out;
};

int run_pa_theory(const PaTheoryOpts& o) {
    json doc{{"schema", kSchema},
             {"command", "pa theory"},
             {"m", o.m},
             {"delta", o.delta},
             {"tau", pa_tau(o.m, o.delta)},
             {"c", pa_c(o.m, o.delta)}};
    if (o.pmf_upto > 0) {
        const auto pmf = pa_limit_pmf_table(o.m, o.delta, o.pmf_upto);
        json rows = json::array();
        for (std::size_t k = 0; k < pmf.size(); ++k) rows.push_back({k, pmf[k]});
        doc["pmf"] = std::move(rows);
    }
    if (!o.curve_out.empty()) {
        if (o.n == 0) throw std::runtime_error("pa theory: --curve-out needs --n");
        // Per-node expected degree with its standard deviation, the dataset
        // behind degree-vs-arrival-order plots.
        std::string csv = "i,expected_degree,sd\n";
        for (std::uint64_t i = 1; i <= o.n; ++i)
            csv += std::to_string(i) + "," +
                   format_double(pa_expected_degree(o.m, o.delta, i, o.n)) + "," +
                   format_double(std::sqrt(pa_degree_variance(o.m, o.delta, i, o.n))) + "\n";
        write_text(o.curve_out, csv);
    }
    if (o.want_expected || o.want_variance) {
        if (o.n == 0)
            throw std::runtime_error("pa theory: --expected/--variance need --n (and --node)");
        if (o.want_expected)
            doc["expected_degree"] = {{"node", o.node},
                                      {"n", o.n},
                                      {"value", pa_expected_degree(o.m, o.delta, o.node, o.n)}};
        if (o.want_variance)
            doc["variance"] = {{"node", o.node},
                               {"n", o.n},
                               {"value", pa_degree_variance(o.m, o.delta, o.node, o.n)},
                               {"value_by_recursion",
                                pa_degree_variance_recursion(o.m, o.delta, o.node, o.n)}};
    }
    emit_json(doc, o.out);
    return 0;
}

// --------------------------------------------------------------- walk ----

struct HittingOpts {
    std::string in;
    NodeId target = 0;
    bool as_json = false;
    std::string out;
};

int run_walk_hitting(const HittingOpts& o) {
    const WeightedGraph g = read_graph(o.in, SelfLoopPolicy::reject);
    const HittingSolution sol = hitting_times(g, o.target);
    if (o.as_json) {
        json times = json::array();
        for (NodeId x = 1; x <= g.node_count(); ++x)
            times.push_back({{"node", x}, {"time", sol.times[x - 1]}});
        emit_json(json{{"schema", kSchema},
                       {"command", "walk hitting"},
                       {"target", o.target},
                       {"max_residual", sol.max_residual},
                       {"times", std::move(times)}},
                  o.out);
    } else {
        std::string text = "node\texpected_hitting_time\n";
        for (NodeId x = 1; x <= g.node_count(); ++x)
            text += std::to_string(x) + "\t" + format_double(sol.times[x - 1]) + "\n";
        if (o.out.empty())
            std::cout << text;
        else
            write_text(o.out, text);
    }
    return 0;
}

struct PairOpts {
    std::string in;
    NodeId x = 0;
    NodeId y = 0;
    std::string out;
};

int run_walk_commute(const PairOpts& o) {
    const WeightedGraph g = read_graph(o.in, SelfLoopPolicy::reject);
    const double commute = commute_time(g, o.x, o.y);
    const double r_eff = effective_resistance(g, o.x, o.y).r_eff;
    const double via_resistance = r_eff * g.total_weight();
    emit_json(json{{"schema", kSchema},
                   {"command", "walk commute"},
                   {"x", o.x},
                   {"y", o.y},
                   {"commute_time", commute},
                   {"r_eff", r_eff},
                   {"total_weight", g.total_weight()},
                   {"resistance_route", via_resistance},
                   {"rel_diff", std::fabs(commute - via_resistance) / via_resistance}},
              o.out);
    return 0;
}

struct McOpts {
    std::string in;
    NodeId x = 0;
    NodeId y = 0;
    std::uint64_t walks = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string out;
};

int run_walk_mc(const McOpts& o) {
    const WeightedGraph g = read_graph(o.in, SelfLoopPolicy::reject);
    const WalkStats stats =
        simulate_walks(g, o.x, o.y, o.walks, o.seed, resolve_threads(o.threads));
    json visits = json::array();
    for (NodeId z = 1; z <= g.node_count(); ++z)
        visits.push_back({{"node", z},
                          {"mean", stats.visit_mean[z - 1]},
                          {"stderr", stats.visit_stderr[z - 1]},
                          {"per_weight", stats.visit_mean[z - 1] / g.degree(z)}});
    emit_json(json{{"schema", kSchema},
                   {"command", "walk mc"},
                   {"source", o.x},
                   {"sink", o.y},
                   {"walks", o.walks},
                   {"seed", o.seed},
                   {"hitting",
                    {{"mean", stats.hitting_mean},
                     {"sd", std::sqrt(stats.hitting_variance)},
                     {"stderr", stats.hitting_stderr}}},
                   {"visits", std::move(visits)}},
              o.out);
    return 0;
}

// ------------------------------------------------------------ network ----

struct ResistanceOpts {
    std::string in;
    NodeId x = 0;
    NodeId y = 0;
    std::string potentials_out;
    std::string out;
};

int run_network_resistance(const ResistanceOpts& o) {
    const WeightedGraph g = read_graph(o.in, SelfLoopPolicy::reject);
    const PotentialSolution pot = effective_resistance(g, o.x, o.y);
    if (!o.potentials_out.empty()) {
        std::string csv = "node,potential\n";
        for (NodeId z = 1; z <= g.node_count(); ++z)
            csv += std::to_string(z) + "," + format_double(pot.potentials[z - 1]) + "\n";
        write_text(o.potentials_out, csv);
    }
    emit_json(json{{"schema", kSchema},
                   {"command", "network resistance"},
                   {"x", o.x},
                   {"y", o.y},
                   {"r_eff", pot.r_eff},
                   {"max_harmonic_residual", pot.max_harmonic_residual}},
              o.out);
    return 0;
}

// ------------------------------------------------------------- verify ----

struct TetaliOpts {
    std::string in;
    double tol = 1e-8;
    std::string out;
};

int run_verify_tetali(const TetaliOpts& o) {
    const WeightedGraph g = read_graph(o.in, SelfLoopPolicy::reject);
    const TetaliReport r = verify_tetali(g);
    const bool pass = r.rel_err <= o.tol;
    emit_json(json{{"schema", kSchema},
                   {"command", "verify tetali"},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"abs_err", r.abs_err},
                   {"rel_err", r.rel_err},
                   {"tol", o.tol},
                   {"pass", pass}},
              o.out);
    return pass ? 0 : 2;
}

// ---------------------------------------------------------------- bio ----

struct BioOpts {
    std::string seqs;
    std::string format = "fasta";
    std::string extra_letters = "X";
    std::string out;
    std::string labels;
    std::uint64_t kmin = 0;
    bool kmin_set = false;
    unsigned threads = 0;
    std::string json_out;
};

SequenceFormat parse_format(const std::string& name) {
    if (name == "fasta") return SequenceFormat::fasta;
    return SequenceFormat::plain;
}

int run_bio_build(const BioOpts& o) {
    const auto seqs = load_sequences(o.seqs, parse_format(o.format), o.extra_letters);
    const MutationNetwork net = build_network(seqs, resolve_threads(o.threads));
    write_text(o.out, format_graph(net.graph));
    if (!o.labels.empty()) {
        std::string csv = "node,id\n";
        for (std::size_t i = 0; i < net.labels.size(); ++i)
            csv += std::to_string(i + 1) + "," + net.labels[i] + "\n";
        write_text(o.labels, csv);
    }
    std::cerr << "mutation network: n=" << net.graph.node_count()
              << " edges=" << net.graph.edge_count() << "\n";
    return 0;
}

int run_bio_report(const BioOpts& o) {
    const auto seqs = load_sequences(o.seqs, parse_format(o.format), o.extra_letters);
    const MutationNetwork net = build_network(seqs, resolve_threads(o.threads));
    PaCompatibilityReport report = pa_compatibility_report(net);
    if (o.kmin_set) {
        // Re-fit at the requested tail cut.
        try {
            report.tau_fit = fit_power_law(histogram(net.graph), o.kmin);
            report.tau_fit_error.clear();
        } catch (const std::exception& e) {
            report.tau_fit.reset();
            report.tau_fit_error = e.what();
        }
    }
    json doc{{"schema", kSchema},
             {"command", "bio report"},
             {"n", net.graph.node_count()},
             {"edges", net.graph.edge_count()},
             {"mean_degree", report.mean_degree},
             {"is_even_mean", report.is_even_mean},
             {"connected", report.connected},
             {"component_sizes", report.component_sizes}};
    if (report.tau_fit)
        doc["tau_fit"] = {{"tau", report.tau_fit->tau},
                          {"k_min", report.tau_fit->k_min},
                          {"n_tail", report.tau_fit->n_tail}};
    else
        doc["tau_fit"] = nullptr;
    if (!report.tau_fit_error.empty()) doc["tau_fit_error"] = report.tau_fit_error;
    emit_json(doc, o.json_out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphlab: random graphs, subgraph sampling, random walks as "
                 "electrical networks, and protein mutation networks"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate random graphs");
    gen->require_subcommand(1);
    GenErOpts er;
    auto* gen_er = gen->add_subcommand("er", "Erdos-Renyi G(n, p)");
    gen_er->add_option("--nodes", er.nodes, "node count")->required();
    gen_er->add_option("--prob", er.prob, "edge probability")->required();
    auto* er_seed = gen_er->add_option("--seed", er.seed, "rng seed (default 1)");
    gen_er->add_option("--out", er.out, "output edge-list file")->required();
    gen_er->callback([&] {
        note_default_seed(er_seed, er.seed);
        exit_code = run_gen_er(er);
    });

    GenPaOpts pa;
    auto* gen_pa = gen->add_subcommand(
        "pa", "Preferential attachment: new nodes attach m edges with probability "
              "proportional to degree + delta");
    gen_pa->add_option("--nodes", pa.nodes, "final node count")->required();
    gen_pa->add_option("--m", pa.m, "edges per new node")->required();
    gen_pa->add_option("--delta", pa.delta, "degree shift, > -m")->required();
    auto* pa_seed = gen_pa->add_option("--seed", pa.seed, "rng seed (default 1)");
    gen_pa->add_flag("--strip-self-loops", pa.strip, "drop node 1's initial self-loops");
    gen_pa->add_option("--track-nodes", pa.track, "node ids whose degree history is recorded")
        ->delimiter(',');
    gen_pa->add_option("--track-out", pa.track_out,
                       "degree-history csv path (default OUT.track.csv)");
    gen_pa->add_option("--out", pa.out, "output edge-list file")->required();
    gen_pa->callback([&] {
        note_default_seed(pa_seed, pa.seed);
        exit_code = run_gen_pa(pa);
    });

    // sample
    auto* sample = app.add_subcommand("sample", "Subgraph sampling");
    sample->require_subcommand(1);
    SampleOpts se, su, sb;
    auto* sample_edges_cmd =
        sample->add_subcommand("edges", "keep every edge independently with probability q");
    sample_edges_cmd->add_option("--q", se.q, "edge keep probability")->required();
    auto* se_seed = sample_edges_cmd->add_option("--seed", se.seed, "rng seed (default 1)");
    sample_edges_cmd->add_option("--in", se.in, "input edge-list file")->required();
    sample_edges_cmd->add_option("--out", se.out, "output edge-list file")->required();
    sample_edges_cmd->callback([&] {
        note_default_seed(se_seed, se.seed);
        exit_code = run_sample(SamplerSpec::Kind::edge_bernoulli, se);
    });

    auto* sample_uniform = sample->add_subcommand(
        "nodes-uniform", "keep a uniformly random subset of exactly KEEP nodes");
    sample_uniform->add_option("--keep", su.keep, "kept node count")->required();
    auto* su_seed = sample_uniform->add_option("--seed", su.seed, "rng seed (default 1)");
    sample_uniform->add_option("--in", su.in, "input edge-list file")->required();
    sample_uniform->add_option("--out", su.out, "output edge-list file")->required();
    sample_uniform->add_option("--map-out", su.map_out,
                               "kept-id mapping csv (default OUT.map.csv)");
    sample_uniform->callback([&] {
        note_default_seed(su_seed, su.seed);
        exit_code = run_sample(SamplerSpec::Kind::node_uniform, su);
    });

    auto* sample_bern = sample->add_subcommand(
        "nodes-bernoulli", "keep every node independently with probability q");
    sample_bern->add_option("--q", sb.q, "node keep probability")->required();
    auto* sb_seed = sample_bern->add_option("--seed", sb.seed, "rng seed (default 1)");
    sample_bern->add_option("--in", sb.in, "input edge-list file")->required();
    sample_bern->add_option("--out", sb.out, "output edge-list file")->required();
    sample_bern->add_option("--map-out", sb.map_out, "kept-id mapping csv (default OUT.map.csv)");
    sample_bern->callback([&] {
        note_default_seed(sb_seed, sb.seed);
        exit_code = run_sample(SamplerSpec::Kind::node_bernoulli, sb);
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Degree statistics");
    analyze->require_subcommand(1);
    DegreesOpts deg;
    auto* analyze_degrees = analyze->add_subcommand("degrees", "degree histogram as csv");
    analyze_degrees->add_option("--in", deg.in, "input edge-list file")->required();
    analyze_degrees->add_option("--out", deg.out, "output csv file")->required();
    analyze_degrees->add_flag("--ccdf", deg.ccdf, "append the N_{>=k} column");
    analyze_degrees->add_option("--view", deg.view, "multiplicity|simple (default multiplicity)")
        ->check(CLI::IsMember({"multiplicity", "simple"}));
    analyze_degrees->callback([&] { exit_code = run_analyze_degrees(deg); });

    PowerlawOpts pl;
    auto* analyze_powerlaw =
        analyze->add_subcommand("powerlaw", "discrete MLE power-law exponent of the degree tail");
    analyze_powerlaw->add_option("--in", pl.in, "input edge-list file")->required();
    auto* kmin_opt = analyze_powerlaw->add_option("--kmin", pl.kmin, "tail cutoff degree");
    analyze_powerlaw->add_option("--out", pl.out, "write json here instead of stdout");
    analyze_powerlaw->callback([&] {
        pl.kmin_set = kmin_opt->count() > 0;
        exit_code = run_analyze_powerlaw(pl);
    });

    BinomDiffOpts bd;
    auto* analyze_binomdiff = analyze->add_subcommand(
        "binomdiff",
        "max-abs pmf deviation of the two node-sampling degree laws per subgraph size");
    analyze_binomdiff->add_option("--nodes", bd.nodes, "graph size n")->required();
    analyze_binomdiff->add_option("--prob", bd.prob, "edge probability p")->required();
    analyze_binomdiff->add_option("--out", bd.out, "output csv file")->required();
    analyze_binomdiff->callback([&] { exit_code = run_analyze_binomdiff(bd); });

    // pa theory
    auto* pa_group = app.add_subcommand("pa", "Preferential-attachment closed forms");
    pa_group->require_subcommand(1);
    PaTheoryOpts th;
    auto* pa_theory = pa_group->add_subcommand(
        "theory", "limit pmf, power-law parameters, expected degree, and degree variance");
    pa_theory->add_option("--m", th.m, "edges per new node")->required();
    pa_theory->add_option("--delta", th.delta, "degree shift, > -m")->required();
    pa_theory->add_option("--pmf-upto", th.pmf_upto, "emit the limit pmf for k <= K");
    pa_theory->add_flag("--expected", th.want_expected, "emit E(degree of --node at size --n)");
    pa_theory->add_flag("--variance", th.want_variance, "emit Var(degree of --node at size --n)");
    pa_theory->add_option("--node", th.node, "node index i");
    pa_theory->add_option("--n", th.n, "graph size n");
    pa_theory->add_option("--curve-out", th.curve_out,
                          "csv of expected degree and sd for every node i <= --n");
    pa_theory->add_option("--out", th.out, "write json here instead of stdout");
    pa_theory->callback([&] { exit_code = run_pa_theory(th); });

    // walk
    auto* walk = app.add_subcommand("walk", "Random walks on weighted graphs");
    walk->require_subcommand(1);
    HittingOpts hit;
    auto* walk_hitting =
        walk->add_subcommand("hitting", "expected hitting times of a target node, exact solve");
    walk_hitting->add_option("--in", hit.in, "input edge-list file")->required();
    walk_hitting->add_option("--target", hit.target, "target node")->required();
    walk_hitting->add_flag("--json", hit.as_json, "json instead of a text table");
    walk_hitting->add_option("--out", hit.out, "write output here instead of stdout");
    walk_hitting->callback([&] { exit_code = run_walk_hitting(hit); });

    PairOpts com;
    auto* walk_commute = walk->add_subcommand(
        "commute", "expected round trip x->y->x and its resistance form R_xy * total weight");
    walk_commute->add_option("--in", com.in, "input edge-list file")->required();
    walk_commute->add_option("--x", com.x, "start node")->required();
    walk_commute->add_option("--y", com.y, "turnaround node")->required();
    walk_commute->add_option("--out", com.out, "write json here instead of stdout");
    walk_commute->callback([&] { exit_code = run_walk_commute(com); });

    McOpts mc;
    auto* walk_mc = walk->add_subcommand(
        "mc", "Monte Carlo walks from x stopped at y: hitting-time and visit-count estimates");
    walk_mc->add_option("--in", mc.in, "input edge-list file")->required();
    walk_mc->add_option("--x", mc.x, "source node")->required();
    walk_mc->add_option("--y", mc.y, "absorbing node")->required();
    walk_mc->add_option("--walks", mc.walks, "number of independent walks")->required();
    auto* mc_seed = walk_mc->add_option("--seed", mc.seed, "rng seed (default 1)");
    walk_mc->add_option("--threads", mc.threads, "worker cap (default: all cores)");
    walk_mc->add_option("--out", mc.out, "write json here instead of stdout");
    walk_mc->callback([&] {
        note_default_seed(mc_seed, mc.seed);
        exit_code = run_walk_mc(mc);
    });

    // network
    auto* network = app.add_subcommand("network", "Electrical-network view");
    network->require_subcommand(1);
    ResistanceOpts res;
    auto* network_resistance = network->add_subcommand(
        "resistance", "effective resistance and node potentials for a unit x->y current");
    network_resistance->add_option("--in", res.in, "input edge-list file")->required();
    network_resistance->add_option("--x", res.x, "source node")->required();
    network_resistance->add_option("--y", res.y, "sink node")->required();
    network_resistance->add_option("--potentials-out", res.potentials_out,
                                   "also write node potentials as csv");
    network_resistance->add_option("--out", res.out, "write json here instead of stdout");
    network_resistance->callback([&] { exit_code = run_network_resistance(res); });

    // verify
    auto* verify = app.add_subcommand("verify", "Identity checks (exit 2 on failure)");
    verify->require_subcommand(1);
    TetaliOpts tet;
    auto* verify_tetali_cmd = verify->add_subcommand(
        "tetali", "conductance-weighted hitting times over directed edges sum to n-1");
    verify_tetali_cmd->add_option("--in", tet.in, "input edge-list file")->required();
    verify_tetali_cmd->add_option("--tol", tet.tol, "relative tolerance (default 1e-8)");
    verify_tetali_cmd->add_option("--out", tet.out, "write json here instead of stdout");
    verify_tetali_cmd->callback([&] { exit_code = run_verify_tetali(tet); });

    // bio
    auto* bio = app.add_subcommand("bio", "Protein mutation networks");
    bio->require_subcommand(1);
    BioOpts bb, br;
    auto* bio_build = bio->add_subcommand(
        "build", "connect equal-length sequences at Hamming distance exactly 1");
    bio_build->add_option("--seqs", bb.seqs, "sequence file")->required();
    bio_build->add_option("--format", bb.format, "fasta|plain (default fasta)")
        ->check(CLI::IsMember({"fasta", "plain"}));
    bio_build->add_option("--extra-letters", bb.extra_letters,
                          "residue letters allowed beyond the 20 amino acids (default X)");
    bio_build->add_option("--out", bb.out, "output edge-list file")->required();
    bio_build->add_option("--labels", bb.labels, "node -> sequence id csv");
    bio_build->add_option("--threads", bb.threads, "worker cap (default: all cores)");
    bio_build->callback([&] { exit_code = run_bio_build(bb); });

    auto* bio_report = bio->add_subcommand(
        "report", "mean degree, connectivity, and scale-free diagnostics of the network");
    bio_report->add_option("--seqs", br.seqs, "sequence file")->required();
    bio_report->add_option("--format", br.format, "fasta|plain (default fasta)")
        ->check(CLI::IsMember({"fasta", "plain"}));
    bio_report->add_option("--extra-letters", br.extra_letters,
                           "residue letters allowed beyond the 20 amino acids (default X)");
    auto* br_kmin = bio_report->add_option("--kmin", br.kmin, "tail cutoff for the tau fit");
    bio_report->add_option("--threads", br.threads, "worker cap (default: all cores)");
    bio_report->add_option("--out", br.json_out, "write json here instead of stdout");
    bio_report->callback([&] {
        br.kmin_set = br_kmin->count() > 0;
        exit_code = run_bio_report(br);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here too; CLI11 gives it exit code 0.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
