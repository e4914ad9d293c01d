#include "graphlab/weighted_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace graphlab {

WeightedGraph::WeightedGraph(NodeId n, std::vector<Edge> edges, bool allow_self_loops)
    : n_(n), allow_self_loops_(allow_self_loops) {
    for (Edge& e : edges) {
        if (e.x < 1 || e.x > n_ || e.y < 1 || e.y > n_)
            throw std::invalid_argument("WeightedGraph: node id out of range [1, " +
                                        std::to_string(n_) + "]");
        if (!std::isfinite(e.c)) throw std::invalid_argument("WeightedGraph: non-finite conductance");
        if (e.c < 0.0) throw std::invalid_argument("WeightedGraph: negative conductance");
        if (e.x == e.y && !allow_self_loops_)
            throw std::invalid_argument("WeightedGraph: self-loop on node " + std::to_string(e.x) +
                                        " but self-loops are disallowed");
        if (e.x > e.y) std::swap(e.x, e.y);
    }
    // Zero-conductance records mean "no edge".
    std::erase_if(edges, [](const Edge& e) { return e.c == 0.0; });

    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });

    // Merge duplicate pairs by summing conductance.
    for (const Edge& e : edges) {
        if (!edges_.empty() && edges_.back().x == e.x && edges_.back().y == e.y)
            edges_.back().c += e.c;
        else
            edges_.push_back(e);
    }

    mu_.assign(n_, 0.0);
    std::vector<std::size_t> deg(n_ + 1, 0);
    for (const Edge& e : edges_) {
        if (e.x == e.y) {
            ++self_loop_count_;
            mu_[e.x - 1] += 2.0 * e.c;
            ++deg[e.x];
        } else {
            mu_[e.x - 1] += e.c;
            mu_[e.y - 1] += e.c;
            ++deg[e.x];
            ++deg[e.y];
        }
    }

    adj_start_.assign(n_ + 1, 0);
    for (NodeId x = 1; x <= n_; ++x) adj_start_[x] = adj_start_[x - 1] + deg[x];
    adj_.resize(adj_start_[n_]);
    std::vector<std::size_t> fill(n_ + 1, 0);
    for (const Edge& e : edges_) {
        adj_[adj_start_[e.x - 1] + fill[e.x]++] = {e.y, e.c};
        if (e.x != e.y) adj_[adj_start_[e.y - 1] + fill[e.y]++] = {e.x, e.c};
    }
    for (NodeId x = 1; x <= n_; ++x) {
        auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(adj_start_[x - 1]);
        auto end = adj_.begin() + static_cast<std::ptrdiff_t>(adj_start_[x]);
        std::sort(begin, end);
    }
}

void WeightedGraph::check_node(NodeId x) const {
    if (x < 1 || x > n_)
        throw std::invalid_argument("node id " + std::to_string(x) + " out of range [1, " +
                                    std::to_string(n_) + "]");
}

std::span<const std::pair<NodeId, double>> WeightedGraph::neighbors(NodeId x) const {
    check_node(x);
    return {adj_.data() + adj_start_[x - 1], adj_start_[x] - adj_start_[x - 1]};
}

double WeightedGraph::degree(NodeId x) const {
    check_node(x);
    return mu_[x - 1];
}

double WeightedGraph::total_weight() const {
    double s = 0.0;
    for (double m : mu_) s += m;
    return s;
}

double WeightedGraph::total_conductance() const {
    double s = 0.0;
    for (const Edge& e : edges_) s += e.c;
    return s;
}

bool WeightedGraph::is_unit_weighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.c == 1.0; });
}

std::vector<std::vector<NodeId>> WeightedGraph::components() const {
    std::vector<std::vector<NodeId>> result;
    std::vector<bool> seen(n_ + 1, false);
    std::vector<NodeId> stack;
    for (NodeId root = 1; root <= n_; ++root) {
        if (seen[root]) continue;
        std::vector<NodeId> comp;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (const auto& [y, c] : neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool WeightedGraph::is_connected() const {
    return components().size() == 1;
}

WeightedGraph WeightedGraph::strip_self_loops() const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_)
        if (e.x != e.y) kept.push_back(e);
    return WeightedGraph(n_, std::move(kept), false);
}

}  // namespace graphlab
