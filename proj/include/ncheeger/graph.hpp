#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncheeger/errors.hpp"
#include "ncheeger/rational.hpp"

namespace ncheeger {

struct WeightedEdge {
    std::string u;
    std::string v;
    Rational weight;
};

// Finite connected graph with a symmetric positive rational weight on each
// edge. Self-loops are allowed; a self-loop contributes its weight once to
// the vertex degree and never crosses any cut. Vertices are identified by
// strings and indexed in lexicographic order. Immutable after construction.
class WeightedGraph {
public:
    struct IndexedEdge {
        int a;  // a <= b
        int b;
        Rational weight;
    };

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }

    std::optional<int> find(std::string_view name) const {
        const auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) return std::nullopt;
        return static_cast<int>(it - names_.begin());
    }

    int index_of(std::string_view name) const {
        const auto v = find(name);
        if (!v) throw UnknownVertexError("unknown vertex '" + std::string(name) + "'");
        return *v;
    }

    const Rational& weight(int a, int b) const {
        return weights_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
    }
    bool adjacent(int a, int b) const { return weight(a, b) > 0; }

    // m_x, the sum of all incident weights (self-loop counted once).
    const Rational& degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    // m(V), the sum of all degrees.
    const Rational& total_measure() const { return total_measure_; }

    // Every edge once, endpoints sorted.
    const std::vector<IndexedEdge>& edges() const { return edges_; }

    friend WeightedGraph build_graph(const std::vector<WeightedEdge>& edges);

private:
    std::vector<std::string> names_;
    std::vector<Rational> weights_;  // dense symmetric n*n
    std::vector<Rational> degrees_;
    Rational total_measure_;
    std::vector<IndexedEdge> edges_;
};

// Validates weights, symmetry-by-construction, positive degrees and
// connectivity (self-loops do not connect anything).
inline WeightedGraph build_graph(const std::vector<WeightedEdge>& edges) {
    if (edges.empty()) throw Error("a graph needs at least one edge");

    std::set<std::string> name_set;
    for (const auto& e : edges) {
        name_set.insert(e.u);
        name_set.insert(e.v);
    }

    WeightedGraph g;
    g.names_.assign(name_set.begin(), name_set.end());
    const int n = g.vertex_count();
    g.weights_.assign(static_cast<std::size_t>(n) * n, Rational(0));
    g.degrees_.assign(static_cast<std::size_t>(n), Rational(0));

    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (!(e.weight > 0)) {
            throw NonPositiveWeightError("edge {" + e.u + "," + e.v + "} has non-positive weight " +
                                         render_rational(e.weight));
        }
        int a = g.index_of(e.u);
        int b = g.index_of(e.v);
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) {
            throw DuplicateEdgeError("duplicate edge {" + e.u + "," + e.v + "}");
        }
        g.weights_[static_cast<std::size_t>(a) * n + b] = e.weight;
        g.weights_[static_cast<std::size_t>(b) * n + a] = e.weight;
    }

    for (int i = 0; i < n; ++i) {
        Rational d(0);
        for (int j = 0; j < n; ++j) d += g.weight(i, j);
        g.degrees_[static_cast<std::size_t>(i)] = d;
        g.total_measure_ += d;
    }

    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            if (g.weight(a, b) > 0) g.edges_.push_back({a, b, g.weight(a, b)});
        }
    }

    // BFS over non-loop edges.
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int y = 0; y < n; ++y) {
            if (y != x && !visited[static_cast<std::size_t>(y)] && g.adjacent(x, y)) {
                visited[static_cast<std::size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
    }
    if (static_cast<int>(queue.size()) != n) {
        throw DisconnectedGraphError("graph is not connected");
    }
    return g;
}

}  // namespace ncheeger
