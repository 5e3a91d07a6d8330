#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ncheeger/errors.hpp"

namespace ncheeger {

struct DenseMatrix {
    int n = 0;
    std::vector<double> data;  // row-major n*n

    DenseMatrix() = default;
    explicit DenseMatrix(int size) : n(size), data(static_cast<std::size_t>(size) * size, 0.0) {}

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

struct SpectrumResult {
    std::vector<double> eigenvalues;                // ascending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
    std::string convention;                         // operator label
    double residual = 0.0;                          // max over pairs of ||A v - lambda M v||_inf
};

namespace detail {
inline constexpr int kMaxJacobiSweeps = 100;
}

// Solves L v = lambda M v for symmetric L and positive diagonal mass M by
// symmetrizing M^(-1/2) L M^(-1/2) and running cyclic Jacobi sweeps until
// every off-diagonal magnitude drops below `tolerance`. Eigenvectors are
// back-transformed and M-normalized (v' M v = 1).
inline SpectrumResult symmetric_eigensolve(const DenseMatrix& stiffness,
                                           const std::vector<double>& mass,
                                           double tolerance = 1e-12,
                                           std::string convention = "plain") {
    const int n = stiffness.n;
    if (static_cast<int>(mass.size()) != n) throw Error("mass vector size mismatch");
    for (double m : mass) {
        if (!(m > 0.0)) throw NonPositiveMassError("mass entries must be positive");
    }

    double scale = 0.0;
    for (double v : stiffness.data) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(stiffness.at(i, j) - stiffness.at(j, i)) >
                1e-12 * std::max(scale, 1e-300)) {
                throw NotSymmetricError("stiffness matrix is not symmetric");
            }
        }
    }

    std::vector<double> inv_sqrt_mass(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv_sqrt_mass[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(mass[static_cast<std::size_t>(i)]);

    DenseMatrix b(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            b.at(i, j) = 0.5 * (stiffness.at(i, j) + stiffness.at(j, i)) *
                         inv_sqrt_mass[static_cast<std::size_t>(i)] * inv_sqrt_mass[static_cast<std::size_t>(j)];
        }
    }
    DenseMatrix v(n);
    for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

    bool converged = n < 2;
    for (int sweep = 0; sweep < detail::kMaxJacobiSweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(b.at(p, q)));
        }
        if (off < tolerance) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = b.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double app = b.at(p, p);
                const double aqq = b.at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double bkp = b.at(k, p);
                    const double bkq = b.at(k, q);
                    b.at(k, p) = b.at(p, k) = c * bkp - s * bkq;
                    b.at(k, q) = b.at(q, k) = s * bkp + c * bkq;
                }
                b.at(p, p) = app - t * apq;
                b.at(q, q) = aqq + t * apq;
                b.at(p, q) = b.at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = v.at(k, p);
                    const double vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - s * vkq;
                    v.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(b.at(p, q)));
        }
        if (off >= tolerance) throw NoConvergenceError("Jacobi sweep limit reached");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return b.at(i, i) < b.at(j, j); });

    SpectrumResult result;
    result.convention = std::move(convention);
    result.eigenvalues.reserve(static_cast<std::size_t>(n));
    result.eigenvectors.reserve(static_cast<std::size_t>(n));
    for (int idx : order) {
        result.eigenvalues.push_back(b.at(idx, idx));
        std::vector<double> vec(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            vec[static_cast<std::size_t>(k)] = v.at(k, idx) * inv_sqrt_mass[static_cast<std::size_t>(k)];
        }
        result.eigenvectors.push_back(std::move(vec));
    }

    double residual = 0.0;
    for (int e = 0; e < n; ++e) {
        const auto& vec = result.eigenvectors[static_cast<std::size_t>(e)];
        const double lambda = result.eigenvalues[static_cast<std::size_t>(e)];
        for (int i = 0; i < n; ++i) {
            double r = -lambda * mass[static_cast<std::size_t>(i)] * vec[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j) r += stiffness.at(i, j) * vec[static_cast<std::size_t>(j)];
            residual = std::max(residual, std::abs(r));
        }
    }
    result.residual = residual;
    return result;
}

}  // namespace ncheeger
