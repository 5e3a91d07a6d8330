#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncheeger/verify.hpp"

namespace ncheeger {

namespace cli_detail {

// Exit codes: 0 success with all checks passing, 1 a check failed,
// 2 input/usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// NCHEEGER_THREADS caps the worker count; 0 or unset means all available.
inline unsigned env_thread_cap() {
    const char* s = std::getenv("NCHEEGER_THREADS");
    if (!s || !*s) return 0;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 0) return 0;
    return static_cast<unsigned>(v);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Domain load_instance(const std::string& graph_path, const std::string& omega_path) {
    const auto graph = parse_graph_file(read_file(graph_path));
    return build_domain(graph, parse_omega_file(read_file(omega_path)));
}

inline void partition_json(JsonWriter& w, const WeightedGraph& g, const Partition& p) {
    w.begin_object();
    w.key("side").begin_array();
    for (int v : p.side()) w.value(g.name(v));
    w.end_array();
    w.key("complement").begin_array();
    for (int v : p.complement()) w.value(g.name(v));
    w.end_array();
    w.end_object();
}

inline std::string partition_text(const WeightedGraph& g, const Partition& p) {
    std::string out = "{";
    bool first = true;
    for (int v : p.side()) {
        if (!first) out += ", ";
        out += g.name(v);
        first = false;
    }
    out += " | ";
    first = true;
    for (int v : p.complement()) {
        if (!first) out += ", ";
        out += g.name(v);
        first = false;
    }
    out += "}";
    return out;
}

inline void cheeger_result_json(JsonWriter& w, const WeightedGraph& g, const char* key,
                                const CheegerResult& result) {
    w.key(key).value(result.value);
    w.key(std::string(key) + "Minimizers").begin_array();
    for (const auto& p : result.minimizers) partition_json(w, g, p);
    w.end_array();
}

inline void check_json(JsonWriter& w, const Check& c) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("claim").value(c.claim);
    w.key("pass").value(c.pass);
    w.key("slack").value(c.slack);
    w.key("exact").value(c.exact);
    w.key("informational").value(c.informational);
    w.end_object();
}

inline void report_json(JsonWriter& w, const VerificationReport& r) {
    w.begin_object();
    w.key("edges").begin_array();
    for (const auto& e : r.edges) {
        w.begin_array().value(e.u).value(e.v).value(e.weight).end_array();
    }
    w.end_array();
    w.key("omega").begin_array();
    for (const auto& v : r.omega) w.value(v);
    w.end_array();
    w.key("tolerance").value(r.tolerance);
    w.key("hN").value(r.neumann_constant);
    w.key("hTilde").value(r.modified_constant);
    w.key("hGModified").value(r.classical_constant_modified);
    w.key("lambda1Neumann").value(r.lambda1_neumann);
    w.key("lambda1Dirichlet").value(r.lambda1_dirichlet);
    w.key("lambda2Dirichlet").value(r.lambda2_dirichlet);
    w.key("dirichletGap").value(r.dirichlet_gap);
    w.key("checks").begin_array();
    for (const auto& c : r.checks) check_json(w, c);
    w.end_array();
    w.key("allPass").value(r.all_pass());
    w.end_object();
}

inline void suite_json(JsonWriter& w, const SuiteReport& s) {
    w.begin_object();
    w.key("seed").value(static_cast<std::uint64_t>(s.seed));
    w.key("count").value(s.count);
    w.key("instancesFailed").value(s.instances_failed);
    w.key("checksRun").value(s.checks_run);
    w.key("checksFailed").value(s.checks_failed);
    w.key("worstSlacks").begin_array();
    for (const auto& e : s.worst_slacks) {
        w.begin_object();
        w.key("check").value(e.check);
        w.key("slack").value(e.slack);
        w.key("instance").value(e.instance);
        w.end_object();
    }
    w.end_array();
    w.key("failedInstances").begin_array();
    for (int i : s.failed_instances) w.value(i);
    w.end_array();
    w.key("failures").begin_array();
    for (const auto& r : s.failures) report_json(w, r);
    w.end_array();
    w.key("allPass").value(s.all_pass());
    w.end_object();
}

struct CheegerArgs {
    std::string graph_path, omega_path;
    std::string what = "hN,hTilde,hG";
    std::string format = "table";
};

inline int cmd_cheeger(const CheegerArgs& args, std::ostream& out) {
    const Domain domain = load_instance(args.graph_path, args.omega_path);
    EnumerationOptions opts;
    opts.threads = env_thread_cap();

    bool want_hn = false, want_ht = false, want_hg = false;
    std::stringstream what(args.what);
    std::string token;
    while (std::getline(what, token, ',')) {
        if (token == "hN") {
            want_hn = true;
        } else if (token == "hTilde") {
            want_ht = true;
        } else if (token == "hG") {
            want_hg = true;
        } else {
            throw Error("unknown quantity '" + token + "' (expected hN, hTilde, hG)");
        }
    }

    std::vector<std::pair<const char*, CheegerResult>> results;
    if (want_hn) results.emplace_back("hN", neumann_cheeger(domain, opts));
    if (want_ht) {
        results.emplace_back("hTilde", modified_cheeger(build_modified_graph(domain), opts));
    }
    if (want_hg) results.emplace_back("hG", classical_cheeger(domain.graph(), opts));

    if (args.format == "json") {
        JsonWriter w;
        w.begin_object();
        for (const auto& [key, result] : results) {
            cheeger_result_json(w, domain.graph(), key, result);
        }
        w.end_object();
        out << w.str() << '\n';
    } else {
        for (const auto& [key, result] : results) {
            out << key << " = " << render_rational(result.value) << '\n';
            out << "  minimizers:";
            for (const auto& p : result.minimizers) {
                out << ' ' << partition_text(domain.graph(), p);
            }
            out << '\n';
        }
    }
    return kExitOk;
}

struct SpectrumArgs {
    std::string graph_path, omega_path;
    std::string which = "both";
    double tolerance = 1e-12;
};

inline int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
    const Domain domain = load_instance(args.graph_path, args.omega_path);
    const bool want_neumann = args.which != "dirichlet";
    const bool want_dirichlet = args.which != "neumann";

    JsonWriter w;
    w.begin_object();
    double route_diff = 0.0;
    if (want_neumann) {
        const auto mg = build_modified_graph(domain);
        const auto direct = neumann_spectrum_direct(domain, args.tolerance);
        const auto modified = neumann_spectrum_via_modified(mg, args.tolerance);
        for (std::size_t i = 0; i < direct.eigenvalues.size(); ++i) {
            route_diff = std::max(route_diff,
                                  std::abs(direct.eigenvalues[i] - modified.eigenvalues[i]));
        }
        const auto emit = [&](const char* key, const SpectrumResult& s) {
            w.key(key).begin_object();
            w.key("eigenvalues").begin_array();
            for (double v : s.eigenvalues) w.value(v);
            w.end_array();
            w.key("residual").value(s.residual);
            w.end_object();
        };
        emit("neumannDirect", direct);
        emit("neumannModified", modified);
        w.key("routeMaxDifference").value(route_diff);
    }
    if (want_dirichlet) {
        const auto dirichlet = dirichlet_spectrum(domain, args.tolerance);
        w.key("dirichlet").begin_object();
        w.key("eigenvalues").begin_array();
        for (double v : dirichlet.eigenvalues) w.value(v);
        w.end_array();
        w.key("residual").value(dirichlet.residual);
        w.key("gap").value(dirichlet.eigenvalues[1] - dirichlet.eigenvalues[0]);
        w.end_object();
    }
    w.end_object();
    out << w.str() << '\n';
    return (want_neumann && route_diff > 1e-9) ? kExitCheckFailed : kExitOk;
}

struct InstanceArgs {
    std::string graph_path, omega_path;
};

inline int cmd_modified(const InstanceArgs& args, std::ostream& out) {
    const Domain domain = load_instance(args.graph_path, args.omega_path);
    out << render_modified_graph_file(build_modified_graph(domain));
    return kExitOk;
}

inline int cmd_sweep(const InstanceArgs& args, std::ostream& out) {
    const Domain domain = load_instance(args.graph_path, args.omega_path);
    const auto mg = build_modified_graph(domain);
    const auto spectrum = neumann_spectrum_via_modified(mg);
    const auto extended = extend_to_boundary(domain, spectrum.eigenvectors[1]);
    const auto sweep = sweep_cut(domain, extended);

    JsonWriter w;
    w.begin_object();
    w.key("value").value(sweep.value);
    w.key("partition");
    partition_json(w, domain.graph(), sweep.partition);
    w.key("lambda1Neumann").value(spectrum.eigenvalues[1]);
    w.end_object();
    out << w.str() << '\n';
    return kExitOk;
}

inline int cmd_equality(const InstanceArgs& args, std::ostream& out) {
    const Domain domain = load_instance(args.graph_path, args.omega_path);
    EnumerationOptions opts;
    opts.threads = env_thread_cap();
    const auto lower = check_lower_equality(domain, opts);
    const auto upper = check_upper_equality(domain, opts);

    JsonWriter w;
    w.begin_object();
    const auto emit = [&](const char* key, const EqualityReport& r, const char* statement) {
        w.key(key).begin_object();
        w.key("statement").value(statement);
        w.key("holds").value(r.holds);
        w.key("predicate").value(r.predicate);
        w.key("hN").value(r.neumann_value);
        w.key("hTilde").value(r.modified_value);
        w.key("intersection").begin_array();
        for (const auto& p : r.intersection) partition_json(w, domain.graph(), p);
        w.end_array();
        w.key("violations").begin_array();
        for (const auto& v : r.violations) {
            w.begin_object();
            w.key("partition");
            partition_json(w, domain.graph(), v.partition);
            w.key("vertex").value(v.vertex);
            w.key("reason").value(v.reason);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    };
    emit("lower", lower, "hTilde == hN");
    emit("upper", upper, "hN == 2*hTilde");
    w.end_object();
    out << w.str() << '\n';
    const bool consistent = lower.holds == lower.predicate && upper.holds == upper.predicate;
    return consistent ? kExitOk : kExitCheckFailed;
}

struct WalkArgs {
    std::string graph_path, omega_path;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::string start;
};

inline int cmd_walk(const WalkArgs& args, std::ostream& out) {
    const Domain domain = load_instance(args.graph_path, args.omega_path);
    const std::string start =
        args.start.empty() ? domain.graph().name(domain.omega().front()) : args.start;
    const auto counts = simulate_reflected_walk(domain, start, args.steps, args.seed);
    const auto mg = build_modified_graph(domain);

    out << "# steps=" << counts.steps << " seed=" << args.seed << " start=" << start << '\n';
    out << "# from\tto\tcount\tempirical\texact\tdiff\n";
    char buf[64];
    for (int a = 0; a < mg.size(); ++a) {
        const std::uint64_t row_total = counts.row_total(a);
        for (int b = 0; b < mg.size(); ++b) {
            const Rational exact = mg.weight(a, b) /
                                   domain.graph().degree(domain.omega()[static_cast<std::size_t>(a)]);
            const std::uint64_t c = counts.count(a, b);
            if (exact == 0 && c == 0) continue;
            const double empirical =
                row_total == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(row_total);
            const double diff = std::abs(empirical - to_double(exact));
            out << counts.vertices[static_cast<std::size_t>(a)] << '\t'
                << counts.vertices[static_cast<std::size_t>(b)] << '\t' << c << '\t';
            std::snprintf(buf, sizeof(buf), "%.6f", empirical);
            out << buf << '\t' << render_rational(exact) << '\t';
            std::snprintf(buf, sizeof(buf), "%.6f", diff);
            out << buf << '\n';
        }
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string graph_path, omega_path;
    double tolerance = 1e-9;
    int random_count = 0;
    std::uint64_t seed = 0;
};

inline int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    JsonWriter w;
    bool ok = false;
    if (args.random_count > 0) {
        SuiteOptions sopts;
        sopts.tolerance = args.tolerance;
        sopts.threads = env_thread_cap();
        const auto suite = verify_random_suite(args.random_count, args.seed, sopts);
        suite_json(w, suite);
        ok = suite.all_pass();
    } else {
        EnumerationOptions opts;
        opts.threads = env_thread_cap();
        const Domain domain = load_instance(args.graph_path, args.omega_path);
        const auto report = verify_instance(domain, args.tolerance, opts);
        report_json(w, report);
        ok = report.all_pass();
    }
    out << w.str() << '\n';
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace cli_detail

// Dispatches one CLI invocation. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"Neumann Cheeger constants, modified graphs and Laplacian spectra on weighted graphs"};
    app.require_subcommand(0, 1);

    CheegerArgs cheeger_args;
    auto* cheeger_cmd = app.add_subcommand("cheeger", "Exact Cheeger constants with minimizers");
    cheeger_cmd->add_option("--graph", cheeger_args.graph_path, "edge-list file")->required();
    cheeger_cmd->add_option("--omega", cheeger_args.omega_path, "omega vertex file")->required();
    cheeger_cmd->add_option("--what", cheeger_args.what, "comma list of hN,hTilde,hG");
    cheeger_cmd->add_option("--format", cheeger_args.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    SpectrumArgs spectrum_args;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Neumann and Dirichlet eigenvalues");
    spectrum_cmd->add_option("--graph", spectrum_args.graph_path, "edge-list file")->required();
    spectrum_cmd->add_option("--omega", spectrum_args.omega_path, "omega vertex file")->required();
    spectrum_cmd->add_option("--which", spectrum_args.which, "spectrum selection")
        ->check(CLI::IsMember({"neumann", "dirichlet", "both"}));
    spectrum_cmd->add_option("--tol", spectrum_args.tolerance, "eigensolver tolerance");

    InstanceArgs modified_args;
    auto* modified_cmd = app.add_subcommand("modified", "Modified edge weights as an edge list");
    modified_cmd->add_option("--graph", modified_args.graph_path, "edge-list file")->required();
    modified_cmd->add_option("--omega", modified_args.omega_path, "omega vertex file")->required();

    InstanceArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep cut of the first Neumann eigenfunction");
    sweep_cmd->add_option("--graph", sweep_args.graph_path, "edge-list file")->required();
    sweep_cmd->add_option("--omega", sweep_args.omega_path, "omega vertex file")->required();

    InstanceArgs equality_args;
    auto* equality_cmd = app.add_subcommand("equality", "Equality characterization reports");
    equality_cmd->add_option("--graph", equality_args.graph_path, "edge-list file")->required();
    equality_cmd->add_option("--omega", equality_args.omega_path, "omega vertex file")->required();

    WalkArgs walk_args;
    auto* walk_cmd = app.add_subcommand("walk", "Reflected random walk versus exact transitions");
    walk_cmd->add_option("--graph", walk_args.graph_path, "edge-list file")->required();
    walk_cmd->add_option("--omega", walk_args.omega_path, "omega vertex file")->required();
    walk_cmd->add_option("--steps", walk_args.steps, "number of effective steps")->required();
    walk_cmd->add_option("--seed", walk_args.seed, "64-bit seed")->required();
    walk_cmd->add_option("--start", walk_args.start, "start vertex (default: first omega vertex)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Verification report as JSON");
    verify_cmd->add_option("--graph", verify_args.graph_path, "edge-list file");
    verify_cmd->add_option("--omega", verify_args.omega_path, "omega vertex file");
    verify_cmd->add_option("--tol", verify_args.tolerance, "float tolerance");
    verify_cmd->add_option("--random", verify_args.random_count, "verify N random instances");
    verify_cmd->add_option("--seed", verify_args.seed, "64-bit seed for --random");

    std::vector<const char*> argv;
    argv.push_back("ncheeger");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (cheeger_cmd->parsed()) return cmd_cheeger(cheeger_args, out);
        if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_args, out);
        if (modified_cmd->parsed()) return cmd_modified(modified_args, out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out);
        if (equality_cmd->parsed()) return cmd_equality(equality_args, out);
        if (walk_cmd->parsed()) return cmd_walk(walk_args, out);
        if (verify_cmd->parsed()) {
            if (verify_args.random_count > 0) {
                if (!verify_args.graph_path.empty() || !verify_args.omega_path.empty()) {
                    err << "error: --random cannot be combined with --graph/--omega\n";
                    return kExitInputError;
                }
            } else if (verify_args.graph_path.empty() || verify_args.omega_path.empty()) {
                err << "error: verify needs either --graph and --omega, or --random N\n";
                return kExitInputError;
            }
            return cmd_verify(verify_args, out);
        }
        err << app.help();
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace ncheeger
