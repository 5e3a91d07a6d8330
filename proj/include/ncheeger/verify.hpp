#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "ncheeger/cheeger.hpp"
#include "ncheeger/io.hpp"
#include "ncheeger/random.hpp"
#include "ncheeger/spectra.hpp"

namespace ncheeger {

// One verified claim. `slack` is the signed margin by which the claim holds;
// a check passes iff slack >= -tolerance (exact checks are decided by
// rational comparison and use tolerance zero). Informational lines never
// fail.
struct Check {
    std::string name;
    std::string claim;
    bool pass = false;
    double slack = 0.0;
    bool exact = false;
    bool informational = false;
};

struct VerificationReport {
    std::vector<WeightedEdge> edges;  // enough to rebuild the instance
    std::vector<std::string> omega;
    double tolerance = 1e-9;
    Rational neumann_constant;             // h_N
    Rational modified_constant;            // Cheeger constant of the modified graph
    Rational classical_constant_modified;  // the same constant through the classical path
    double lambda1_neumann = 0.0;
    double lambda1_dirichlet = 0.0;
    double lambda2_dirichlet = 0.0;
    double dirichlet_gap = 0.0;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.informational && !c.pass) return false;
        }
        return true;
    }
};

namespace detail {

inline Check exact_le(std::string name, const Rational& lhs, const Rational& rhs,
                      const std::string& label) {
    Check c;
    c.name = std::move(name);
    c.claim = label + ": " + render_rational(lhs) + " <= " + render_rational(rhs);
    c.pass = lhs <= rhs;
    c.slack = to_double(Rational(rhs - lhs));
    c.exact = true;
    return c;
}

inline Check exact_eq(std::string name, const Rational& lhs, const Rational& rhs,
                      const std::string& label) {
    Check c;
    c.name = std::move(name);
    c.claim = label + ": " + render_rational(lhs) + " == " + render_rational(rhs);
    c.pass = lhs == rhs;
    const Rational diff = lhs < rhs ? Rational(rhs - lhs) : Rational(lhs - rhs);
    c.slack = -to_double(diff);
    c.exact = true;
    return c;
}

inline Check float_le(std::string name, double lhs, double rhs, double tolerance,
                      const std::string& label) {
    Check c;
    c.name = std::move(name);
    c.claim = label + ": " + format_double(lhs) + " <= " + format_double(rhs);
    c.slack = rhs - lhs;
    c.pass = c.slack >= -tolerance;
    return c;
}

inline Check boolean(std::string name, std::string claim, bool ok) {
    Check c;
    c.name = std::move(name);
    c.claim = std::move(claim);
    c.pass = ok;
    c.slack = ok ? 0.0 : -1.0;
    c.exact = true;
    return c;
}

}  // namespace detail

// Evaluates every inequality the library vouches for on one instance:
// exact comparison of the two Cheeger constants, the spectral sandwich for
// the first nontrivial Neumann eigenvalue through both constants, the
// combined and weak lower bounds, and the classical estimate on the modified
// graph as a cross-check. The Dirichlet gap is reported without asserting an
// inequality: the gap-versus-Neumann comparison depends on a normalization
// convention this library does not pin down (the desk example gives
// gap = sqrt(2) < 3/2 = lambda1N under the convention used here).
inline VerificationReport verify_instance(const Domain& domain, double tolerance = 1e-9,
                                          const EnumerationOptions& opts = {}) {
    VerificationReport r;
    const auto& g = domain.graph();
    for (const auto& e : g.edges()) r.edges.push_back({g.name(e.a), g.name(e.b), e.weight});
    for (int x : domain.omega()) r.omega.push_back(g.name(x));
    r.tolerance = tolerance;

    const auto hn = neumann_cheeger(domain, opts);
    const auto mg = build_modified_graph(domain);
    const auto ht = modified_cheeger(mg, opts);
    const auto plain = as_plain_graph(mg);
    const auto hg = classical_cheeger(plain, opts);
    const auto neumann = neumann_spectrum_via_modified(mg);
    const auto dirichlet = dirichlet_spectrum(domain);
    const auto plain_spec = plain_spectrum(plain);

    r.neumann_constant = hn.value;
    r.modified_constant = ht.value;
    r.classical_constant_modified = hg.value;
    r.lambda1_neumann = neumann.eigenvalues[1];
    r.lambda1_dirichlet = dirichlet.eigenvalues[0];
    r.lambda2_dirichlet = dirichlet.eigenvalues[1];
    r.dirichlet_gap = r.lambda2_dirichlet - r.lambda1_dirichlet;

    const double hn_d = to_double(hn.value);
    const double ht_d = to_double(ht.value);
    const double hg_d = to_double(hg.value);
    const double lam = r.lambda1_neumann;
    const double lam_plain = plain_spec.eigenvalues[1];
    const double lower_neumann = 2.0 - std::sqrt(std::max(0.0, 4.0 - hn_d * hn_d));
    const double lower_modified = 1.0 - std::sqrt(std::max(0.0, 1.0 - ht_d * ht_d));

    r.checks.push_back(detail::exact_le("cheeger-comparison/lower", ht.value, hn.value,
                                        "hTilde <= hN"));
    r.checks.push_back(detail::exact_le("cheeger-comparison/upper", hn.value,
                                        Rational(2 * ht.value), "hN <= 2*hTilde"));
    r.checks.push_back(detail::float_le("neumann-estimate/lower", lower_neumann, lam, tolerance,
                                        "2 - sqrt(4 - hN^2) <= lambda1N"));
    r.checks.push_back(detail::float_le("neumann-estimate/upper", lam, 2.0 * hn_d, tolerance,
                                        "lambda1N <= 2*hN"));
    r.checks.push_back(detail::float_le("modified-estimate/lower", lower_modified, lam, tolerance,
                                        "1 - sqrt(1 - hTilde^2) <= lambda1N"));
    r.checks.push_back(detail::float_le("modified-estimate/upper", lam, 2.0 * ht_d, tolerance,
                                        "lambda1N <= 2*hTilde"));
    r.checks.push_back(detail::float_le("combined-estimate/lower",
                                        std::max(lower_neumann, lower_modified), lam, tolerance,
                                        "max of the two lower bounds <= lambda1N"));
    r.checks.push_back(detail::float_le("combined-estimate/weak-lower",
                                        std::max(hn_d * hn_d / 4.0, ht_d * ht_d / 2.0), lam,
                                        tolerance, "max(hN^2/4, hTilde^2/2) <= lambda1N"));
    r.checks.push_back(detail::exact_eq("classical-estimate/consistency", hg.value, ht.value,
                                        "hG(modified) == hTilde"));
    r.checks.push_back(detail::float_le(
        "classical-estimate/lower", 1.0 - std::sqrt(std::max(0.0, 1.0 - hg_d * hg_d)), lam_plain,
        tolerance, "1 - sqrt(1 - hG^2) <= lambda1(modified)"));
    r.checks.push_back(detail::float_le("classical-estimate/upper", lam_plain, 2.0 * hg_d,
                                        tolerance, "lambda1(modified) <= 2*hG"));

    Check gap;
    gap.name = "dirichlet-gap/report";
    gap.claim = "lambda2D - lambda1D = " + format_double(r.dirichlet_gap) +
                " reported alongside lambda1N = " + format_double(lam) + " (not asserted)";
    gap.pass = true;
    gap.slack = r.dirichlet_gap - lam;
    gap.informational = true;
    r.checks.push_back(gap);
    return r;
}

struct SuiteOptions {
    int min_vertices = 4;
    int max_vertices = 8;
    double edge_probability = 0.5;
    int max_weight_numerator = 12;
    int max_weight_denominator = 4;
    double tolerance = 1e-9;
    int random_functions_per_instance = 100;
    unsigned threads = 1;  // 0 = hardware concurrency
};

// Random connected weighted graph with a random valid omega, resampled until
// every downstream precondition holds (connected graph, |omega| >= 2,
// nonempty boundary, connected modified graph).
inline Domain random_instance(std::mt19937_64& rng, const SuiteOptions& sopts = {}) {
    while (true) {
        const int n = rand_int(rng, sopts.min_vertices, sopts.max_vertices);
        std::vector<WeightedEdge> edges;
        std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rand_unit(rng) < sopts.edge_probability) {
                    const int num = rand_int(rng, 1, sopts.max_weight_numerator);
                    const int den = rand_int(rng, 1, sopts.max_weight_denominator);
                    edges.push_back({"v" + std::to_string(i + 1), "v" + std::to_string(j + 1),
                                     Rational(num, den)});
                    adjacency[static_cast<std::size_t>(i)].push_back(j);
                    adjacency[static_cast<std::size_t>(j)].push_back(i);
                }
            }
        }
        if (edges.empty()) continue;
        std::vector<char> visited(static_cast<std::size_t>(n), 0);
        std::vector<int> queue{0};
        visited[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int y : adjacency[static_cast<std::size_t>(queue[head])]) {
                if (!visited[static_cast<std::size_t>(y)]) {
                    visited[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
        if (static_cast<int>(queue.size()) != n) continue;

        const auto graph = build_graph(edges);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::set<std::string> omega;
            for (int v = 0; v < n; ++v) {
                if (rand_bool(rng)) omega.insert(graph.name(v));
            }
            if (omega.size() < 2 || static_cast<int>(omega.size()) >= n) continue;
            Domain domain = build_domain(graph, omega);
            if (!build_modified_graph(domain).connected()) continue;
            return domain;
        }
    }
}

namespace detail {

inline std::vector<Rational> random_rational_function(const Domain& domain, std::mt19937_64& rng,
                                                      const SuiteOptions& sopts) {
    while (true) {
        std::vector<Rational> f;
        f.reserve(domain.closure().size());
        for (std::size_t i = 0; i < domain.closure().size(); ++i) {
            const int num = rand_int(rng, -sopts.max_weight_numerator, sopts.max_weight_numerator);
            const int den = rand_int(rng, 1, sopts.max_weight_denominator);
            f.emplace_back(num, den);
        }
        const Rational& first = f[static_cast<std::size_t>(
            domain.closure_position(domain.omega().front()))];
        for (int x : domain.omega()) {
            if (f[static_cast<std::size_t>(domain.closure_position(x))] != first) return f;
        }
    }
}

// All partitions of omega, canonical sides.
inline std::vector<Partition> all_omega_partitions(const Domain& domain) {
    const auto& omega = domain.omega();
    const int k = static_cast<int>(omega.size());
    std::vector<Partition> out;
    for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> side;
        for (int i = 1; i < k; ++i) {
            if (mask & (1u << (i - 1))) side.push_back(omega[static_cast<std::size_t>(i)]);
        }
        out.emplace_back(Universe::Omega, std::move(side), omega);
    }
    return out;
}

}  // namespace detail

// The executable content of the structural theorems on one instance: exact
// Sobolev/coarea identities, the equality characterizations and their
// minimizer-set inclusions, the lift guarantee, sweep bounds, eigen-route
// agreement and spectral sanity. Deterministic for a fixed seed.
inline std::vector<Check> property_checks(const Domain& domain, std::uint64_t seed,
                                          const SuiteOptions& sopts = {},
                                          const EnumerationOptions& eopts = {}) {
    std::vector<Check> checks;
    std::mt19937_64 rng(seed);

    const auto mg = build_modified_graph(domain);
    const auto hn = neumann_cheeger(domain, eopts);
    const auto ht = modified_cheeger(mg, eopts);

    {  // modified weights: symmetry and degree preservation, recomputed
        Rational worst(0);
        bool symmetric = true;
        for (int a = 0; a < mg.size(); ++a) {
            Rational row(0);
            for (int b = 0; b < mg.size(); ++b) {
                row += mg.weight(a, b);
                if (mg.weight(a, b) != mg.weight(b, a)) symmetric = false;
            }
            Rational dev = row - domain.graph().degree(domain.omega()[static_cast<std::size_t>(a)]);
            if (dev < 0) dev = -dev;
            if (dev > worst) worst = dev;
        }
        checks.push_back(detail::boolean("degree-preservation",
                                         "modified degrees equal original degrees exactly",
                                         worst == 0));
        checks.push_back(detail::boolean("modified-symmetry",
                                         "modified weights are symmetric", symmetric));
    }

    {  // the two Neumann assemblies agree eigenvalue by eigenvalue
        const auto via_modified = neumann_spectrum_via_modified(mg);
        const auto direct = neumann_spectrum_direct(domain);
        double worst = 0.0;
        for (std::size_t i = 0; i < via_modified.eigenvalues.size(); ++i) {
            worst = std::max(worst,
                             std::abs(via_modified.eigenvalues[i] - direct.eigenvalues[i]));
        }
        Check c;
        c.name = "assembly-agreement";
        c.claim = "direct and modified Neumann spectra agree, max diff " + format_double(worst);
        c.slack = -worst;
        c.pass = worst <= sopts.tolerance;
        checks.push_back(c);

        Check zero;
        zero.name = "spectrum-zero-mode";
        zero.claim = "lambda0 = " + format_double(via_modified.eigenvalues[0]);
        zero.slack = -std::abs(via_modified.eigenvalues[0]);
        zero.pass = std::abs(via_modified.eigenvalues[0]) <= sopts.tolerance;
        checks.push_back(zero);

        double mass_total = 0.0;
        for (int x : domain.omega()) mass_total += to_double(domain.graph().degree(x));
        const double constant_level = 1.0 / std::sqrt(mass_total);
        double dev = 0.0;
        for (double v : via_modified.eigenvectors[0]) {
            dev = std::max(dev, std::abs(std::abs(v) - constant_level));
        }
        Check cm;
        cm.name = "spectrum-constant-mode";
        cm.claim = "zero-mode eigenvector is constant, max deviation " + format_double(dev);
        cm.slack = -dev;
        cm.pass = dev <= 1e-6;
        checks.push_back(cm);

        const double lo = *std::min_element(via_modified.eigenvalues.begin(),
                                            via_modified.eigenvalues.end());
        const double hi = *std::max_element(via_modified.eigenvalues.begin(),
                                            via_modified.eigenvalues.end());
        Check range;
        range.name = "eigenvalue-range";
        range.claim = "Neumann eigenvalues lie in [0, 2]: min " + format_double(lo) + ", max " +
                      format_double(hi);
        range.slack = std::min(lo, 2.0 - hi);
        range.pass = range.slack >= -sopts.tolerance;
        checks.push_back(range);

        Check res;
        res.name = "solver-residual";
        const double worst_res = std::max(via_modified.residual, direct.residual);
        res.claim = "eigen residual " + format_double(worst_res);
        res.slack = -worst_res;
        res.pass = worst_res <= sopts.tolerance;
        checks.push_back(res);

        // Boundary equation for the extended first nontrivial eigenvector.
        const auto extended = extend_to_boundary(domain, via_modified.eigenvectors[1]);
        double flux = 0.0;
        for (int z : domain.boundary()) {
            double acc = 0.0;
            for (int y : domain.omega()) {
                acc += to_double(domain.graph().weight(y, z)) *
                       (extended[static_cast<std::size_t>(domain.closure_position(y))] -
                        extended[static_cast<std::size_t>(domain.closure_position(z))]);
            }
            flux = std::max(flux, std::abs(acc));
        }
        Check bc;
        bc.name = "boundary-equation";
        bc.claim = "zero-flux boundary equation, max residual " + format_double(flux);
        bc.slack = -flux;
        bc.pass = flux <= sopts.tolerance;
        checks.push_back(bc);

        // Variational consistency of the Rayleigh quotient.
        double worst_margin = 0.0;
        bool rayleigh_ok = true;
        for (int i = 0; i < sopts.random_functions_per_instance; ++i) {
            std::vector<double> f(domain.closure().size());
            for (auto& v : f) v = rand_unit(rng);
            bool constant = true;
            const double first = f[static_cast<std::size_t>(
                domain.closure_position(domain.omega().front()))];
            for (int x : domain.omega()) {
                if (f[static_cast<std::size_t>(domain.closure_position(x))] != first) constant = false;
            }
            if (constant) continue;
            const double margin = rayleigh_quotient(domain, f) - via_modified.eigenvalues[1];
            worst_margin = std::min(worst_margin, margin);
            if (margin < -sopts.tolerance) rayleigh_ok = false;
        }
        Check ray;
        ray.name = "rayleigh-consistency";
        ray.claim = "lambda1N lower-bounds the Rayleigh quotient, worst margin " +
                    format_double(worst_margin);
        ray.slack = worst_margin;
        ray.pass = rayleigh_ok;
        checks.push_back(ray);

        // Sweep of the extended eigenvector upper-bounds nothing below h_N.
        const auto sweep = sweep_cut(domain, extended);
        checks.push_back(detail::exact_le("sweep-upper-bound", hn.value, sweep.value,
                                          "hN <= sweep value"));
    }

    {  // Sobolev quotient: indicator minimum equals h_N, random functions stay above
        const auto& closure = domain.closure();
        const int nc = static_cast<int>(closure.size());
        Rational best(0);
        bool have_best = false;
        for (std::uint32_t mask = 1; mask < (1u << (nc - 1)); ++mask) {
            std::vector<Rational> f(static_cast<std::size_t>(nc), Rational(-1));
            for (int i = 1; i < nc; ++i) {
                if (mask & (1u << (i - 1))) f[static_cast<std::size_t>(i)] = Rational(1);
            }
            Rational q;
            try {
                q = sobolev_quotient(domain, f);
            } catch (const ZeroDenominatorError&) {
                continue;
            }
            if (!have_best || q < best) {
                best = q;
                have_best = true;
            }
        }
        checks.push_back(detail::exact_eq("indicator-minimum", best, hn.value,
                                          "min indicator Sobolev quotient == hN"));

        Rational worst_margin;
        bool first_f = true;
        bool sobolev_ok = true;
        bool coarea_ok = true;
        double coarea_dev = 0.0;
        for (int i = 0; i < sopts.random_functions_per_instance; ++i) {
            const auto f = detail::random_rational_function(domain, rng, sopts);
            const Rational q = sobolev_quotient(domain, f);
            const Rational margin = q - hn.value;
            if (margin < 0) sobolev_ok = false;
            if (first_f || margin < worst_margin) {
                worst_margin = margin;
                first_f = false;
            }
            const auto terms = coarea_identity(domain, f);
            if (terms.total_variation != terms.levelset_integral) {
                coarea_ok = false;
                coarea_dev = std::max(
                    coarea_dev,
                    std::abs(to_double(Rational(terms.total_variation - terms.levelset_integral))));
            }
        }
        Check sob;
        sob.name = "sobolev-lower-bound";
        sob.claim = "random Sobolev quotients stay above hN, worst margin " +
                    render_rational(worst_margin);
        sob.slack = to_double(worst_margin);
        sob.pass = sobolev_ok;
        sob.exact = true;
        checks.push_back(sob);

        Check co;
        co.name = "coarea-identity";
        co.claim = "total variation equals the level-set integral exactly";
        co.slack = -coarea_dev;
        co.pass = coarea_ok;
        co.exact = true;
        checks.push_back(co);
    }

    {  // equality characterizations and minimizer-set inclusions
        const auto lower = check_lower_equality(domain, eopts);
        checks.push_back(detail::boolean(
            "lower-equality-characterization",
            std::string("hTilde == hN is ") + (lower.holds ? "true" : "false") +
                " and the predicate agrees",
            lower.holds == lower.predicate));
        const auto upper = check_upper_equality(domain, eopts);
        checks.push_back(detail::boolean(
            "upper-equality-characterization",
            std::string("hN == 2*hTilde is ") + (upper.holds ? "true" : "false") +
                " and the predicate agrees",
            upper.holds == upper.predicate));

        const auto induced = detail::induced_omega_partitions(domain, hn.minimizers);
        bool lower_inclusion = true;
        if (lower.holds) {
            for (const auto& p : induced) {
                if (!std::binary_search(ht.minimizers.begin(), ht.minimizers.end(), p)) {
                    lower_inclusion = false;
                }
            }
        }
        checks.push_back(detail::boolean(
            "minimizer-inclusion-lower",
            "when hTilde == hN, induced closure minimizers are modified minimizers",
            lower_inclusion));

        bool upper_inclusion = true;
        if (upper.holds) {
            for (const auto& p : ht.minimizers) {
                if (!std::binary_search(induced.begin(), induced.end(), p)) {
                    upper_inclusion = false;
                }
            }
        }
        checks.push_back(detail::boolean(
            "minimizer-inclusion-upper",
            "when hN == 2*hTilde, modified minimizers are induced closure minimizers",
            upper_inclusion));
    }

    {  // lifting every partition of omega
        bool guarantee_ok = true;
        bool above_min_ok = true;
        Rational worst_margin;
        bool first = true;
        for (const auto& p : detail::all_omega_partitions(domain)) {
            const Rational zeta = modified_quotient(mg, p);
            const auto lifted = lift_partition(domain, p);
            const auto eta = neumann_quotient(domain, lifted);
            if (!eta) {
                guarantee_ok = false;
                continue;
            }
            const Rational margin = 2 * zeta - *eta;
            if (margin < 0) guarantee_ok = false;
            if (*eta < hn.value) above_min_ok = false;
            if (first || margin < worst_margin) {
                worst_margin = margin;
                first = false;
            }
        }
        Check lift;
        lift.name = "lift-guarantee";
        lift.claim = "lifted quotient <= 2 * modified quotient for every omega partition, worst margin " +
                     render_rational(worst_margin);
        lift.slack = to_double(worst_margin);
        lift.pass = guarantee_ok;
        lift.exact = true;
        checks.push_back(lift);
        checks.push_back(detail::boolean("lift-above-minimum",
                                         "every lifted partition stays at or above hN",
                                         above_min_ok));
    }

    {  // scaling every weight leaves the constants unchanged
        const Rational scale(rand_int(rng, 1, sopts.max_weight_numerator),
                             rand_int(rng, 1, sopts.max_weight_denominator));
        std::vector<WeightedEdge> scaled;
        const auto& g = domain.graph();
        for (const auto& e : g.edges()) {
            scaled.push_back({g.name(e.a), g.name(e.b), e.weight * scale});
        }
        std::set<std::string> omega_names;
        for (int x : domain.omega()) omega_names.insert(g.name(x));
        const Domain scaled_domain = build_domain(build_graph(scaled), omega_names);
        const auto hn2 = neumann_cheeger(scaled_domain, eopts);
        const auto ht2 = modified_cheeger(build_modified_graph(scaled_domain), eopts);
        checks.push_back(detail::boolean(
            "scaling-invariance",
            "hN and hTilde are invariant under scaling all weights by " + render_rational(scale),
            hn2.value == hn.value && ht2.value == ht.value));
    }

    return checks;
}

struct SuiteReport {
    std::uint64_t seed = 0;
    int count = 0;
    int instances_failed = 0;
    std::uint64_t checks_run = 0;
    std::uint64_t checks_failed = 0;
    struct Extreme {
        std::string check;
        double slack = 0.0;
        int instance = -1;
    };
    std::vector<Extreme> worst_slacks;        // one per check name, sorted by name
    std::vector<int> failed_instances;        // indices into the suite
    std::vector<VerificationReport> failures;  // full reports for those instances

    bool all_pass() const { return checks_failed == 0; }
};

inline std::uint64_t instance_seed(std::uint64_t master, int index) {
    return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

// Generates `count` random instances and runs verify_instance plus the full
// property suite on each. Instances may be verified concurrently; the
// aggregate is assembled in index order, so the report is byte-identical for
// a fixed seed regardless of the worker count.
inline SuiteReport verify_random_suite(int count, std::uint64_t seed,
                                       const SuiteOptions& sopts = {}) {
    if (count < 1) throw Error("suite needs at least one instance");

    std::vector<VerificationReport> reports(static_cast<std::size_t>(count));
    unsigned threads = sopts.threads == 0 ? std::thread::hardware_concurrency() : sopts.threads;
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(count));

    const EnumerationOptions eopts{24, 1};
    const auto run_one = [&](int i) {
        const std::uint64_t si = instance_seed(seed, i);
        std::mt19937_64 rng(si);
        const Domain domain = random_instance(rng, sopts);
        VerificationReport r = verify_instance(domain, sopts.tolerance, eopts);
        const auto extra = property_checks(domain, splitmix64(si), sopts, eopts);
        r.checks.insert(r.checks.end(), extra.begin(), extra.end());
        reports[static_cast<std::size_t>(i)] = std::move(r);
    };

    if (threads <= 1) {
        for (int i = 0; i < count; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                while (true) {
                    const int i = next.fetch_add(1);
                    if (i >= count) return;
                    run_one(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    SuiteReport suite;
    suite.seed = seed;
    suite.count = count;
    std::map<std::string, SuiteReport::Extreme> worst;
    for (int i = 0; i < count; ++i) {
        const auto& r = reports[static_cast<std::size_t>(i)];
        bool failed = false;
        for (const auto& c : r.checks) {
            if (c.informational) continue;
            ++suite.checks_run;
            if (!c.pass) {
                ++suite.checks_failed;
                failed = true;
            }
            auto [it, inserted] = worst.try_emplace(c.name, SuiteReport::Extreme{c.name, c.slack, i});
            if (!inserted && c.slack < it->second.slack) {
                it->second.slack = c.slack;
                it->second.instance = i;
            }
        }
        if (failed) {
            ++suite.instances_failed;
            suite.failed_instances.push_back(i);
            suite.failures.push_back(r);
        }
    }
    suite.worst_slacks.reserve(worst.size());
    for (auto& [name, extreme] : worst) suite.worst_slacks.push_back(extreme);
    return suite;
}

}  // namespace ncheeger
