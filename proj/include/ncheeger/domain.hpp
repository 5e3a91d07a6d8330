#pragma once

#include <set>
#include <string>
#include <vector>

#include "ncheeger/graph.hpp"

namespace ncheeger {

// A subset Omega of a weighted graph together with everything derived from
// it: the vertex boundary (outside vertices adjacent to Omega), the closure,
// the boundary measure m'_z (weight from z into Omega), and the edge set
// E_Omega of edges with at least one endpoint in Omega. Immutable.
class Domain {
public:
    const WeightedGraph& graph() const { return graph_; }

    // Sorted graph indices.
    const std::vector<int>& omega() const { return omega_; }
    const std::vector<int>& boundary() const { return boundary_; }
    const std::vector<int>& closure() const { return closure_; }

    bool in_omega(int v) const { return omega_flag_[static_cast<std::size_t>(v)] != 0; }
    bool in_closure(int v) const { return closure_flag_[static_cast<std::size_t>(v)] != 0; }

    // Position of a graph vertex within omega()/closure() order, -1 if absent.
    int omega_position(int v) const { return omega_pos_[static_cast<std::size_t>(v)]; }
    int closure_position(int v) const { return closure_pos_[static_cast<std::size_t>(v)]; }

    // m'_z for a boundary vertex z (graph index).
    const Rational& boundary_measure(int z) const {
        const int p = boundary_pos_[static_cast<std::size_t>(z)];
        if (p < 0) throw UnknownVertexError("vertex '" + graph_.name(z) + "' is not a boundary vertex");
        return boundary_measure_[static_cast<std::size_t>(p)];
    }

    // E_Omega, endpoints sorted; self-loops inside Omega are included (they
    // never cross a cut and vanish in every energy).
    const std::vector<WeightedGraph::IndexedEdge>& edge_set() const { return edge_set_; }

    // m(Omega).
    const Rational& omega_measure() const { return omega_measure_; }

    friend Domain build_domain(const WeightedGraph& graph, const std::set<std::string>& omega);

private:
    WeightedGraph graph_;
    std::vector<int> omega_, boundary_, closure_;
    std::vector<char> omega_flag_, closure_flag_;
    std::vector<int> omega_pos_, closure_pos_, boundary_pos_;
    std::vector<Rational> boundary_measure_;
    std::vector<WeightedGraph::IndexedEdge> edge_set_;
    Rational omega_measure_;
};

inline Domain build_domain(const WeightedGraph& graph, const std::set<std::string>& omega) {
    if (omega.size() < 2) throw OmegaTooSmallError("omega needs at least two vertices");

    Domain d;
    d.graph_ = graph;
    const int n = graph.vertex_count();
    d.omega_flag_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& name : omega) {
        d.omega_flag_[static_cast<std::size_t>(graph.index_of(name))] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (d.omega_flag_[static_cast<std::size_t>(v)]) d.omega_.push_back(v);
    }

    for (int z = 0; z < n; ++z) {
        if (d.omega_flag_[static_cast<std::size_t>(z)]) continue;
        Rational toward_omega(0);
        for (int y : d.omega_) toward_omega += graph.weight(z, y);
        if (toward_omega > 0) {
            d.boundary_.push_back(z);
            d.boundary_measure_.push_back(toward_omega);
        }
    }
    if (d.boundary_.empty()) {
        throw EmptyVertexBoundaryError("omega has an empty vertex boundary");
    }

    d.closure_ = d.omega_;
    d.closure_.insert(d.closure_.end(), d.boundary_.begin(), d.boundary_.end());
    std::sort(d.closure_.begin(), d.closure_.end());

    d.closure_flag_.assign(static_cast<std::size_t>(n), 0);
    d.omega_pos_.assign(static_cast<std::size_t>(n), -1);
    d.closure_pos_.assign(static_cast<std::size_t>(n), -1);
    d.boundary_pos_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < d.omega_.size(); ++i) {
        d.omega_pos_[static_cast<std::size_t>(d.omega_[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < d.closure_.size(); ++i) {
        d.closure_flag_[static_cast<std::size_t>(d.closure_[i])] = 1;
        d.closure_pos_[static_cast<std::size_t>(d.closure_[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < d.boundary_.size(); ++i) {
        d.boundary_pos_[static_cast<std::size_t>(d.boundary_[i])] = static_cast<int>(i);
    }

    for (const auto& e : graph.edges()) {
        if (d.in_omega(e.a) || d.in_omega(e.b)) d.edge_set_.push_back(e);
    }

    for (int x : d.omega_) d.omega_measure_ += graph.degree(x);
    return d;
}

namespace detail {

// Maps a set of vertex names to graph indices, requiring each to lie in the
// domain's closure.
inline std::vector<int> closure_subset_indices(const Domain& d, const std::set<std::string>& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& name : s) {
        const int v = d.graph().index_of(name);
        if (!d.in_closure(v)) {
            throw UnknownVertexError("vertex '" + name + "' is outside the closure");
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// m(s ∩ Omega): degrees taken in the full graph, boundary vertices contribute
// nothing.
inline Rational measure(const Domain& d, const std::set<std::string>& s) {
    Rational total(0);
    for (int v : detail::closure_subset_indices(d, s)) {
        if (d.in_omega(v)) total += d.graph().degree(v);
    }
    return total;
}

// Total weight of E_Omega edges with exactly one endpoint in s.
inline Rational cut_weight(const Domain& d, const std::set<std::string>& s) {
    const auto indices = detail::closure_subset_indices(d, s);
    if (indices.empty() || indices.size() == d.closure().size()) {
        throw EmptyOrFullSubsetError("subset must be a nonempty proper subset of the closure");
    }
    std::vector<char> in_s(static_cast<std::size_t>(d.graph().vertex_count()), 0);
    for (int v : indices) in_s[static_cast<std::size_t>(v)] = 1;
    Rational total(0);
    for (const auto& e : d.edge_set()) {
        if (in_s[static_cast<std::size_t>(e.a)] != in_s[static_cast<std::size_t>(e.b)]) {
            total += e.weight;
        }
    }
    return total;
}

}  // namespace ncheeger
