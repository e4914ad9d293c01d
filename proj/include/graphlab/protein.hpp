#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphlab/degree_stats.hpp"
#include "graphlab/weighted_graph.hpp"

namespace graphlab {

// Protein sequences and the mutation network connecting sequences of equal
// length at Hamming distance exactly 1. No alignment: length mismatches are
// never edges, and duplicate sequences (distance 0) stay separate nodes
// without an edge.

struct SequenceRecord {
    std::string id;
    std::string residues;  // validated against the amino-acid alphabet

    std::size_t length() const { return residues.size(); }
};

enum class SequenceFormat { fasta, plain };

// Residues are the 20 canonical amino-acid letters plus any extra letters
// given here (default allows the common ambiguity code X). Input is
// upper-cased before validation. plain format: one sequence per line, the id
// is the 1-based file line number.
std::vector<SequenceRecord> parse_sequences(std::string_view text, SequenceFormat format,
                                            std::string_view extra_letters = "X");
std::vector<SequenceRecord> load_sequences(const std::filesystem::path& path,
                                           SequenceFormat format,
                                           std::string_view extra_letters = "X");

struct MutationNetwork {
    WeightedGraph graph;              // unit weights, simple
    std::vector<std::string> labels;  // labels[node-1] = sequence id
};

MutationNetwork build_network(std::span<const SequenceRecord> sequences, unsigned threads = 1);

// Diagnostics for whether a network could have come from the
// preferential-attachment construction, whose graphs are connected with mean
// degree exactly 2m: mean degree and its evenness, connectivity, component
// sizes, and the power-law exponent fit (absent when the fit is degenerate).
struct PaCompatibilityReport {
    double mean_degree = 0.0;
    bool is_even_mean = false;  // |mean - 2m| <= 1e-9 for some integer m >= 0
    bool connected = false;
    std::vector<std::size_t> component_sizes;  // descending
    std::optional<PowerLawFit> tau_fit;
    std::string tau_fit_error;  // set when tau_fit is absent
};

PaCompatibilityReport pa_compatibility_report(const MutationNetwork& network);

}  // namespace graphlab
