#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncheeger/ncheeger.hpp"

namespace testutil {

using namespace ncheeger;

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Domain load_fixture(const std::string& graph_name, const std::string& omega_name) {
    const auto graph = parse_graph_file(slurp(fixture_path(graph_name)));
    return build_domain(graph, parse_omega_file(slurp(fixture_path(omega_name))));
}

// Length-2 path v1-v2-v3 with unit weights, omega = {v1, v3}.
inline Domain path2_ends() {
    return build_domain(build_graph({{"v1", "v2", Rational(1)}, {"v2", "v3", Rational(1)}}),
                        {"v1", "v3"});
}

// Same path, omega = {v1, v2}.
inline Domain path2_left() {
    return build_domain(build_graph({{"v1", "v2", Rational(1)}, {"v2", "v3", Rational(1)}}),
                        {"v1", "v2"});
}

// Length-3 path v1-v2-v3-v4 with unit weights, omega = {v2, v3}.
inline Domain path3_middle() {
    return build_domain(build_graph({{"v1", "v2", Rational(1)},
                                     {"v2", "v3", Rational(1)},
                                     {"v3", "v4", Rational(1)}}),
                        {"v2", "v3"});
}

// Triangle with two heavy sides a and one unit side, omega = {v1, v3}.
inline Domain triangle_sides(int a) {
    return build_domain(build_graph({{"v1", "v3", Rational(1)},
                                     {"v1", "v2", Rational(a)},
                                     {"v2", "v3", Rational(a)}}),
                        {"v1", "v3"});
}

// Name-level brute force over all nonempty proper subsets of the closure:
// an oracle for the exhaustive minimizer enumeration, built only from the
// public measure/cut operations.
struct BruteForceResult {
    Rational value;
    std::set<std::set<std::string>> minimizing_sides;  // canonical: side without smallest vertex
};

inline BruteForceResult brute_force_neumann(const Domain& domain) {
    std::vector<std::string> closure_names;
    for (int v : domain.closure()) closure_names.push_back(domain.graph().name(v));
    const std::size_t n = closure_names.size();

    BruteForceResult result;
    bool have = false;
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
        std::set<std::string> side;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t(1) << i)) side.insert(closure_names[i]);
        }
        std::set<std::string> complement;
        for (const auto& name : closure_names) {
            if (!side.count(name)) complement.insert(name);
        }
        const Rational side_volume = measure(domain, side);
        const Rational complement_volume = measure(domain, complement);
        if (side_volume == 0 || complement_volume == 0) continue;
        const Rational q = cut_weight(domain, side) /
                           (side_volume < complement_volume ? side_volume : complement_volume);
        const auto canonical = side.count(closure_names.front()) ? complement : side;
        if (!have || q < result.value) {
            result.value = q;
            result.minimizing_sides = {canonical};
            have = true;
        } else if (q == result.value) {
            result.minimizing_sides.insert(canonical);
        }
    }
    return result;
}

inline std::set<std::set<std::string>> minimizer_sides(const WeightedGraph& g,
                                                       const std::vector<Partition>& minimizers) {
    std::set<std::set<std::string>> out;
    for (const auto& p : minimizers) {
        std::set<std::string> side;
        for (int v : p.canonical_key()) side.insert(g.name(v));
        out.insert(side);
    }
    return out;
}

}  // namespace testutil
