#pragma once

#include <cmath>
#include <vector>

#include "ncheeger/eigensolve.hpp"
#include "ncheeger/reflection.hpp"

namespace ncheeger {

namespace detail {

inline std::vector<double> omega_mass(const Domain& d) {
    std::vector<double> mass;
    mass.reserve(d.omega().size());
    for (int x : d.omega()) mass.push_back(to_double(d.graph().degree(x)));
    return mass;
}

// Two omega vertices are effectively coupled when they share an edge or a
// common boundary neighbour; this is exactly the positivity pattern of the
// modified weights, evaluated on the original rationals.
inline bool effectively_coupled(const Domain& d, int x, int y) {
    const auto& g = d.graph();
    if (g.weight(x, y) > 0) return true;
    for (int z : d.boundary()) {
        if (g.weight(x, z) > 0 && g.weight(z, y) > 0) return true;
    }
    return false;
}

inline bool omega_effectively_connected(const Domain& d) {
    const auto& omega = d.omega();
    const int k = static_cast<int>(omega.size());
    std::vector<char> visited(static_cast<std::size_t>(k), 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int b = 0; b < k; ++b) {
            if (!visited[static_cast<std::size_t>(b)] &&
                effectively_coupled(d, omega[static_cast<std::size_t>(queue[head])],
                                    omega[static_cast<std::size_t>(b)])) {
                visited[static_cast<std::size_t>(b)] = 1;
                queue.push_back(b);
            }
        }
    }
    return static_cast<int>(queue.size()) == k;
}

}  // namespace detail

// Spectrum of the Laplacian on the modified graph: the quadratic form
// sum w~(x,y) (f(x)-f(y))^2 / 2 against the mass m. Self-loops cancel in the
// form, so the diagonal is the degree minus the self-loop weight.
inline SpectrumResult neumann_spectrum_via_modified(const ModifiedGraph& mg,
                                                    double tolerance = 1e-12) {
    if (!mg.connected()) throw DisconnectedGraphError("modified graph is disconnected");
    const int k = mg.size();
    DenseMatrix stiffness(k);
    for (int a = 0; a < k; ++a) {
        stiffness.at(a, a) = to_double(mg.degree(a) - mg.weight(a, a));
        for (int b = a + 1; b < k; ++b) {
            const double w = to_double(mg.weight(a, b));
            stiffness.at(a, b) = -w;
            stiffness.at(b, a) = -w;
        }
    }
    return symmetric_eigensolve(stiffness, detail::omega_mass(mg.domain()), tolerance,
                                "neumann-modified");
}

// Same spectrum assembled without the modified graph: the eigenvalue system
// on the closure with the zero-flux condition at each boundary vertex,
// boundary values eliminated through
//   f(z) = sum_y w(z,y) f(y) / m'_z,
// leaving an |omega|-dimensional generalized problem.
inline SpectrumResult neumann_spectrum_direct(const Domain& domain, double tolerance = 1e-12) {
    if (!detail::omega_effectively_connected(domain)) {
        throw DisconnectedGraphError("omega is disconnected under boundary reflection");
    }
    const auto& g = domain.graph();
    const auto& omega = domain.omega();
    const int k = static_cast<int>(omega.size());

    DenseMatrix coupling(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            coupling.at(a, b) = to_double(g.weight(omega[static_cast<std::size_t>(a)],
                                                   omega[static_cast<std::size_t>(b)]));
        }
    }
    for (int z : domain.boundary()) {
        const double inv_m = 1.0 / to_double(domain.boundary_measure(z));
        for (int a = 0; a < k; ++a) {
            const double xz = to_double(g.weight(omega[static_cast<std::size_t>(a)], z));
            if (xz == 0.0) continue;
            for (int b = 0; b < k; ++b) {
                const double zy = to_double(g.weight(z, omega[static_cast<std::size_t>(b)]));
                if (zy == 0.0) continue;
                coupling.at(a, b) += xz * zy * inv_m;
            }
        }
    }

    DenseMatrix stiffness(k);
    for (int a = 0; a < k; ++a) {
        stiffness.at(a, a) = to_double(g.degree(omega[static_cast<std::size_t>(a)])) - coupling.at(a, a);
        for (int b = 0; b < k; ++b) {
            if (b != a) stiffness.at(a, b) = -coupling.at(a, b);
        }
    }
    return symmetric_eigensolve(stiffness, detail::omega_mass(domain), tolerance,
                                "neumann-direct");
}

// Extends a function on omega to the closure by the zero-flux averaging rule;
// interior values are untouched. Input indexed by omega order, output by
// closure order.
inline std::vector<double> extend_to_boundary(const Domain& domain,
                                              const std::vector<double>& f_omega) {
    if (f_omega.size() != domain.omega().size()) throw Error("function size mismatch with omega");
    const auto& g = domain.graph();
    std::vector<double> out(domain.closure().size(), 0.0);
    for (std::size_t i = 0; i < domain.closure().size(); ++i) {
        const int v = domain.closure()[i];
        if (domain.in_omega(v)) {
            out[i] = f_omega[static_cast<std::size_t>(domain.omega_position(v))];
        } else {
            double acc = 0.0;
            for (std::size_t a = 0; a < domain.omega().size(); ++a) {
                acc += to_double(g.weight(v, domain.omega()[a])) * f_omega[a];
            }
            out[i] = acc / to_double(domain.boundary_measure(v));
        }
    }
    return out;
}

// D(f) = sum over E_Omega (each edge once) of (f(x)-f(y))^2 w(x,y).
inline double dirichlet_energy(const Domain& domain, const std::vector<double>& f_closure) {
    if (f_closure.size() != domain.closure().size()) throw Error("function size mismatch with closure");
    double energy = 0.0;
    for (const auto& e : domain.edge_set()) {
        const double dx = f_closure[static_cast<std::size_t>(domain.closure_position(e.a))] -
                          f_closure[static_cast<std::size_t>(domain.closure_position(e.b))];
        energy += dx * dx * to_double(e.weight);
    }
    return energy;
}

// D(f) / inf_c sum (f(x)-c)^2 m_x over omega; the infimum sits at the
// m-weighted mean. Lower-bounds nothing below the first nontrivial Neumann
// eigenvalue.
inline double rayleigh_quotient(const Domain& domain, const std::vector<double>& f_closure) {
    if (f_closure.size() != domain.closure().size()) throw Error("function size mismatch with closure");
    bool constant = true;
    const double first = f_closure[static_cast<std::size_t>(
        domain.closure_position(domain.omega().front()))];
    double mass_total = 0.0, weighted_sum = 0.0;
    for (int x : domain.omega()) {
        const double fx = f_closure[static_cast<std::size_t>(domain.closure_position(x))];
        if (fx != first) constant = false;
        const double m = to_double(domain.graph().degree(x));
        mass_total += m;
        weighted_sum += fx * m;
    }
    if (constant) throw ConstantFunctionError("function is constant on omega");
    const double mean = weighted_sum / mass_total;
    double denom = 0.0;
    for (int x : domain.omega()) {
        const double dx = f_closure[static_cast<std::size_t>(domain.closure_position(x))] - mean;
        denom += dx * dx * to_double(domain.graph().degree(x));
    }
    return dirichlet_energy(domain, f_closure) / denom;
}

// Spectrum of the quadratic form D(f) over functions vanishing on the
// boundary, against the omega mass. Eigenvalues are reported starting from
// the first (there is no trivial zero mode here).
inline SpectrumResult dirichlet_spectrum(const Domain& domain, double tolerance = 1e-12) {
    const auto& g = domain.graph();
    const auto& omega = domain.omega();
    const int k = static_cast<int>(omega.size());
    DenseMatrix stiffness(k);
    for (int a = 0; a < k; ++a) {
        const int x = omega[static_cast<std::size_t>(a)];
        stiffness.at(a, a) = to_double(g.degree(x) - g.weight(x, x));
        for (int b = a + 1; b < k; ++b) {
            const double w = to_double(g.weight(x, omega[static_cast<std::size_t>(b)]));
            stiffness.at(a, b) = -w;
            stiffness.at(b, a) = -w;
        }
    }
    return symmetric_eigensolve(stiffness, detail::omega_mass(domain), tolerance, "dirichlet");
}

// Normalized Laplacian spectrum of a plain graph (mass = degree), used for
// the classical Cheeger estimate on the modified graph.
inline SpectrumResult plain_spectrum(const WeightedGraph& graph, double tolerance = 1e-12) {
    const int n = graph.vertex_count();
    DenseMatrix stiffness(n);
    std::vector<double> mass(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        stiffness.at(a, a) = to_double(graph.degree(a) - graph.weight(a, a));
        mass[static_cast<std::size_t>(a)] = to_double(graph.degree(a));
        for (int b = a + 1; b < n; ++b) {
            const double w = to_double(graph.weight(a, b));
            stiffness.at(a, b) = -w;
            stiffness.at(b, a) = -w;
        }
    }
    return symmetric_eigensolve(stiffness, mass, tolerance, "plain");
}

}  // namespace ncheeger
