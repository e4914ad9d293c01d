#include "graphlab/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace graphlab {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& message) {
    throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + message);
}

bool parse_u32(std::string_view token, std::uint32_t& out) {
    const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
    return res.ec == std::errc{} && res.ptr == token.data() + token.size();
}

bool parse_f64(std::string_view token, double& out) {
    const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
    return res.ec == std::errc{} && res.ptr == token.data() + token.size();
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text, SelfLoopPolicy policy) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    NodeId n = 0;
    std::vector<Edge> edges;
    bool saw_self_loop = false;

    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.empty() || fields[0].front() == '#') continue;
        if (!have_n) {
            if (fields.size() != 1 || !parse_u32(fields[0], n))
                fail(line_no, "expected the node count");
            have_n = true;
            continue;
        }
        if (fields.size() != 2 && fields.size() != 3)
            fail(line_no, "expected 'x y' or 'x y c'");
        NodeId x = 0, y = 0;
        if (!parse_u32(fields[0], x) || !parse_u32(fields[1], y))
            fail(line_no, "malformed node id");
        if (x < 1 || x > n || y < 1 || y > n)
            fail(line_no, "node id out of range [1, " + std::to_string(n) + "]");
        double c = 1.0;
        if (fields.size() == 3) {
            if (!parse_f64(fields[2], c) || !std::isfinite(c))
                fail(line_no, "malformed conductance");
            if (c < 0.0) fail(line_no, "negative conductance");
        }
        if (x == y) {
            if (policy == SelfLoopPolicy::reject) fail(line_no, "self-loop not allowed here");
            saw_self_loop = true;
        }
        edges.push_back(Edge{x, y, c});
    }
    if (!have_n) throw std::runtime_error("edge list: missing node count line");
    return WeightedGraph(n, std::move(edges), saw_self_loop);
}

WeightedGraph read_graph(const std::filesystem::path& path, SelfLoopPolicy policy) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_graph(buffer.str(), policy);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::string format_graph(const WeightedGraph& g) {
    std::string out = std::to_string(g.node_count());
    out.push_back('\n');
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.x);
        out.push_back(' ');
        out += std::to_string(e.y);
        out.push_back(' ');
        out += format_double(e.c);
        out.push_back('\n');
    }
    return out;
}

void write_graph(const WeightedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << format_graph(g);
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace graphlab
