#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncheeger/domain.hpp"
#include "ncheeger/random.hpp"

namespace ncheeger {

// The boundary-free graph (Omega, modified weights) obtained by folding one
// reflection through each boundary vertex into the edge weights:
//
//   w~(x,y) = w(x,y) + sum_z w(x,z) * w(z,y) / m'_z   over boundary z.
//
// Reflection produces self-loops and bridge edges near the boundary but
// preserves every degree: the modified degree of x equals m_x exactly.
// Vertices are addressed by their position in the domain's omega order.
class ModifiedGraph {
public:
    const Domain& domain() const { return domain_; }
    int size() const { return static_cast<int>(domain_.omega().size()); }

    const Rational& weight(int a, int b) const {
        return weights_[static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) +
                        static_cast<std::size_t>(b)];
    }
    const Rational& degree(int a) const { return degrees_[static_cast<std::size_t>(a)]; }

    const std::string& name(int a) const {
        return domain_.graph().name(domain_.omega()[static_cast<std::size_t>(a)]);
    }

    // Connectivity through positive off-diagonal modified weights. Omega can
    // come out disconnected when its pieces only communicate through paths of
    // length > 2 in the closure; the weights are still well defined and only
    // spectral/classical consumers reject that case.
    bool connected() const { return connected_; }

    friend ModifiedGraph build_modified_graph(const Domain& domain);

private:
    Domain domain_;
    std::vector<Rational> weights_;
    std::vector<Rational> degrees_;
    bool connected_ = true;
};

inline ModifiedGraph build_modified_graph(const Domain& domain) {
    ModifiedGraph mg;
    mg.domain_ = domain;
    const auto& g = domain.graph();
    const auto& omega = domain.omega();
    const int k = static_cast<int>(omega.size());
    mg.weights_.assign(static_cast<std::size_t>(k) * k, Rational(0));
    mg.degrees_.assign(static_cast<std::size_t>(k), Rational(0));

    for (int a = 0; a < k; ++a) {
        const int x = omega[static_cast<std::size_t>(a)];
        for (int b = a; b < k; ++b) {
            const int y = omega[static_cast<std::size_t>(b)];
            Rational w = g.weight(x, y);
            for (std::size_t i = 0; i < domain.boundary().size(); ++i) {
                const int z = domain.boundary()[i];
                const Rational& xz = g.weight(x, z);
                if (xz == 0) continue;
                const Rational& zy = g.weight(z, y);
                if (zy == 0) continue;
                w += xz * zy / domain.boundary_measure(z);
            }
            mg.weights_[static_cast<std::size_t>(a) * k + b] = w;
            mg.weights_[static_cast<std::size_t>(b) * k + a] = w;
        }
    }

    for (int a = 0; a < k; ++a) {
        Rational d(0);
        for (int b = 0; b < k; ++b) d += mg.weight(a, b);
        mg.degrees_[static_cast<std::size_t>(a)] = d;
        if (d != g.degree(omega[static_cast<std::size_t>(a)])) {
            throw std::logic_error("degree preservation violated in modified graph");
        }
    }

    std::vector<char> visited(static_cast<std::size_t>(k), 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int b = 0; b < k; ++b) {
            if (b != queue[head] && !visited[static_cast<std::size_t>(b)] &&
                mg.weight(queue[head], b) > 0) {
                visited[static_cast<std::size_t>(b)] = 1;
                queue.push_back(b);
            }
        }
    }
    mg.connected_ = static_cast<int>(queue.size()) == k;
    return mg;
}

// Re-wraps the modified weights as a standalone WeightedGraph on Omega, the
// form the classical Cheeger and spectrum operations consume.
inline WeightedGraph as_plain_graph(const ModifiedGraph& mg) {
    std::vector<WeightedEdge> edges;
    for (int a = 0; a < mg.size(); ++a) {
        for (int b = a; b < mg.size(); ++b) {
            if (mg.weight(a, b) > 0) edges.push_back({mg.name(a), mg.name(b), mg.weight(a, b)});
        }
    }
    return build_graph(edges);  // throws DisconnectedGraphError when omega splits
}

// Empirical transition counts of the reflected walk, indexed by omega order.
struct WalkCounts {
    std::vector<std::string> vertices;
    std::vector<std::uint64_t> counts;  // row-major, from -> to
    std::uint64_t steps = 0;

    std::uint64_t count(int from, int to) const {
        return counts[static_cast<std::size_t>(from) * vertices.size() + static_cast<std::size_t>(to)];
    }
    std::uint64_t row_total(int from) const {
        std::uint64_t t = 0;
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            t += counts[static_cast<std::size_t>(from) * vertices.size() + j];
        }
        return t;
    }
};

// Runs the walk for `steps` effective transitions: from x move to y in the
// closure with probability w(x,y)/m_x; a landing on the boundary immediately
// re-enters omega with probability w(z,y)/m'_z and the boundary visit is not
// a state. Deterministic for a fixed seed.
inline WalkCounts simulate_reflected_walk(const Domain& domain, const std::string& start,
                                          std::uint64_t steps, std::uint64_t seed) {
    if (steps < 1) throw Error("walk needs at least one step");
    const auto& g = domain.graph();
    const auto start_index = g.find(start);
    if (!start_index || !domain.in_omega(*start_index)) {
        throw InvalidStartError("start vertex '" + start + "' is not in omega");
    }

    const int k = static_cast<int>(domain.omega().size());

    struct Target {
        double cumulative;
        int position;  // omega position, or boundary position when boundary=true
        bool boundary;
    };
    // Per omega vertex: cumulative distribution over closure neighbours.
    std::vector<std::vector<Target>> from_omega(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        const int x = domain.omega()[static_cast<std::size_t>(a)];
        const double inv_m = 1.0 / to_double(g.degree(x));
        double cum = 0.0;
        auto& row = from_omega[static_cast<std::size_t>(a)];
        for (int y : domain.closure()) {
            if (g.weight(x, y) == 0) continue;
            cum += to_double(g.weight(x, y)) * inv_m;
            if (domain.in_omega(y)) {
                row.push_back({cum, domain.omega_position(y), false});
            } else {
                int bpos = 0;
                while (domain.boundary()[static_cast<std::size_t>(bpos)] != y) ++bpos;
                row.push_back({cum, bpos, true});
            }
        }
        row.back().cumulative = 1.0;
    }
    // Per boundary vertex: cumulative re-entry distribution over omega.
    std::vector<std::vector<Target>> from_boundary(domain.boundary().size());
    for (std::size_t i = 0; i < domain.boundary().size(); ++i) {
        const int z = domain.boundary()[i];
        const double inv_m = 1.0 / to_double(domain.boundary_measure(z));
        double cum = 0.0;
        auto& row = from_boundary[i];
        for (int a = 0; a < k; ++a) {
            const int y = domain.omega()[static_cast<std::size_t>(a)];
            if (g.weight(z, y) == 0) continue;
            cum += to_double(g.weight(z, y)) * inv_m;
            row.push_back({cum, a, false});
        }
        row.back().cumulative = 1.0;
    }

    const auto sample = [](const std::vector<Target>& row, double u) {
        for (const auto& t : row) {
            if (u < t.cumulative) return t;
        }
        return row.back();
    };

    WalkCounts wc;
    wc.vertices.reserve(static_cast<std::size_t>(k));
    for (int x : domain.omega()) wc.vertices.push_back(g.name(x));
    wc.counts.assign(static_cast<std::size_t>(k) * k, 0);
    wc.steps = steps;

    std::mt19937_64 rng(seed);
    int current = domain.omega_position(*start_index);
    for (std::uint64_t s = 0; s < steps; ++s) {
        Target t = sample(from_omega[static_cast<std::size_t>(current)], rand_unit(rng));
        if (t.boundary) {
            t = sample(from_boundary[static_cast<std::size_t>(t.position)], rand_unit(rng));
        }
        ++wc.counts[static_cast<std::size_t>(current) * k + static_cast<std::size_t>(t.position)];
        current = t.position;
    }
    return wc;
}

}  // namespace ncheeger
