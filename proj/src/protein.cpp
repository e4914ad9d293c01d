#include "graphlab/protein.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

namespace graphlab {

namespace {

constexpr std::string_view kAminoAcids = "ACDEFGHIKLMNPQRSTVWY";

std::array<bool, 256> make_alphabet(std::string_view extra_letters) {
    std::array<bool, 256> ok{};
    for (char c : kAminoAcids) ok[static_cast<unsigned char>(c)] = true;
    for (char c : extra_letters)
        ok[static_cast<unsigned char>(std::toupper(static_cast<unsigned char>(c)))] = true;
    return ok;
}

void append_residues(SequenceRecord& record, std::string_view chunk,
                     const std::array<bool, 256>& alphabet, std::size_t line_no) {
    for (char raw : chunk) {
        if (std::isspace(static_cast<unsigned char>(raw))) continue;
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
        if (!alphabet[static_cast<unsigned char>(c)])
            throw std::runtime_error("sequence line " + std::to_string(line_no) +
                                     ": character '" + std::string(1, raw) +
                                     "' is not in the amino-acid alphabet");
        record.residues.push_back(c);
    }
}

}  // namespace

std::vector<SequenceRecord> parse_sequences(std::string_view text, SequenceFormat format,
                                            std::string_view extra_letters) {
    const std::array<bool, 256> alphabet = make_alphabet(extra_letters);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<SequenceRecord> records;

    if (format == SequenceFormat::fasta) {
        bool open = false;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            if (line[0] == '>') {
                std::istringstream header(line.substr(1));
                std::string id;
                header >> id;
                if (id.empty()) id = "record-" + std::to_string(records.size() + 1);
                records.push_back(SequenceRecord{std::move(id), ""});
                open = true;
                continue;
            }
            if (!open)
                throw std::runtime_error("sequence line " + std::to_string(line_no) +
                                         ": residues before the first '>' header");
            append_residues(records.back(), line, alphabet, line_no);
        }
        for (const SequenceRecord& r : records)
            if (r.residues.empty())
                throw std::runtime_error("fasta record '" + r.id + "' has no residues");
    } else {
        while (std::getline(in, line)) {
            ++line_no;
            const bool blank = std::all_of(line.begin(), line.end(), [](char c) {
                return std::isspace(static_cast<unsigned char>(c));
            });
            if (blank) continue;
            SequenceRecord record{std::to_string(line_no), ""};
            append_residues(record, line, alphabet, line_no);
            records.push_back(std::move(record));
        }
    }
    if (records.empty()) throw std::runtime_error("no sequences found in input");
    return records;
}

std::vector<SequenceRecord> load_sequences(const std::filesystem::path& path,
                                           SequenceFormat format,
                                           std::string_view extra_letters) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_sequences(buffer.str(), format, extra_letters);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

namespace {

// Hamming distance with early exit: equal-length strings, distance capped
// at 2 because only distance 1 matters.
bool is_single_mutation(const std::string& a, const std::string& b) {
    int mismatches = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i] && ++mismatches > 1) return false;
    }
    return mismatches == 1;
}

std::vector<Edge> bucket_edges(std::span<const SequenceRecord> sequences,
                               std::span<const NodeId> bucket) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < bucket.size(); ++i)
        for (std::size_t j = i + 1; j < bucket.size(); ++j)
            if (is_single_mutation(sequences[bucket[i] - 1].residues,
                                   sequences[bucket[j] - 1].residues))
                edges.push_back(Edge{bucket[i], bucket[j], 1.0});
    return edges;
}

}  // namespace

MutationNetwork build_network(std::span<const SequenceRecord> sequences, unsigned threads) {
    if (sequences.empty()) throw std::invalid_argument("build_network: need at least one sequence");

    // Only equal-length pairs can be at substitution distance 1.
    std::map<std::size_t, std::vector<NodeId>> buckets;
    for (std::size_t i = 0; i < sequences.size(); ++i)
        buckets[sequences[i].length()].push_back(static_cast<NodeId>(i + 1));

    std::vector<Edge> edges;
    if (threads <= 1 || buckets.size() == 1) {
        for (const auto& [length, bucket] : buckets) {
            std::vector<Edge> part = bucket_edges(sequences, bucket);
            edges.insert(edges.end(), part.begin(), part.end());
        }
    } else {
        std::vector<std::future<std::vector<Edge>>> futures;
        for (const auto& [length, bucket] : buckets)
            futures.push_back(std::async(std::launch::async, [&sequences, &bucket] {
                return bucket_edges(sequences, bucket);
            }));
        for (auto& f : futures) {
            std::vector<Edge> part = f.get();
            edges.insert(edges.end(), part.begin(), part.end());
        }
    }

    MutationNetwork network;
    network.graph =
        WeightedGraph(static_cast<NodeId>(sequences.size()), std::move(edges), false);
    network.labels.reserve(sequences.size());
    for (const SequenceRecord& r : sequences) network.labels.push_back(r.id);
    return network;
}

PaCompatibilityReport pa_compatibility_report(const MutationNetwork& network) {
    const WeightedGraph& g = network.graph;
    PaCompatibilityReport report;
    const double n = static_cast<double>(g.node_count());
    report.mean_degree = g.total_weight() / n;  // = 2 #edges / n on unit weights

    const double half = report.mean_degree / 2.0;
    report.is_even_mean = std::fabs(report.mean_degree - 2.0 * std::round(half)) <= 1e-9;

    const auto comps = g.components();
    report.connected = comps.size() == 1;
    for (const auto& comp : comps) report.component_sizes.push_back(comp.size());
    std::sort(report.component_sizes.rbegin(), report.component_sizes.rend());

    try {
        report.tau_fit = fit_power_law(histogram(g));
    } catch (const std::exception& e) {
        report.tau_fit_error = e.what();
    }
    return report;
}

}  // namespace graphlab
