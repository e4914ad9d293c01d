#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphlab/weighted_graph.hpp"

namespace graphlab {

// Edge-list text format: first line is the node count n; every following
// non-comment line is "x y c" with 1-based node ids and an optional
// conductance c (default 1). Lines starting with '#' and blank lines are
// ignored. Fields are whitespace-separated, decimal point is always '.'.
enum class SelfLoopPolicy { reject, allow };

WeightedGraph read_graph(const std::filesystem::path& path,
                         SelfLoopPolicy policy = SelfLoopPolicy::allow);
WeightedGraph parse_graph(std::string_view text,
                          SelfLoopPolicy policy = SelfLoopPolicy::allow);

void write_graph(const WeightedGraph& g, const std::filesystem::path& path);
std::string format_graph(const WeightedGraph& g);

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value);

}  // namespace graphlab
