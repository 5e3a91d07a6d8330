#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <thread>
#include <tuple>
#include <vector>

#include "ncheeger/partition.hpp"
#include "ncheeger/reflection.hpp"

namespace ncheeger {

enum class CheegerKind { Neumann, Modified, Classical };

inline const char* cheeger_kind_name(CheegerKind k) {
    switch (k) {
        case CheegerKind::Neumann: return "hN";
        case CheegerKind::Modified: return "hTilde";
        case CheegerKind::Classical: return "hG";
    }
    return "?";
}

// Exact constant plus the complete set of attaining partitions, deduplicated
// by canonical key and sorted.
struct CheegerResult {
    Rational value;
    std::vector<Partition> minimizers;
    Universe universe;
    CheegerKind kind;
};

struct EnumerationOptions {
    int limit = 24;        // largest universe enumerated exhaustively
    unsigned threads = 1;  // 0 = hardware concurrency
};

// Cut weight over the smaller interior volume for a partition of the
// closure. Sides that miss omega entirely have zero volume; the quotient is
// +infinity there (nullopt) and such partitions never attain the minimum.
inline std::optional<Rational> neumann_quotient(const Domain& domain, const Partition& p) {
    if (p.universe() != Universe::Closure || p.members() != domain.closure()) {
        throw WrongUniverseError("expected a partition of the closure of this domain");
    }
    Rational side_volume(0);
    for (int v : p.side()) {
        if (domain.in_omega(v)) side_volume += domain.graph().degree(v);
    }
    const Rational complement_volume = domain.omega_measure() - side_volume;
    if (side_volume == 0 || complement_volume == 0) return std::nullopt;

    Rational cut(0);
    for (const auto& e : domain.edge_set()) {
        if (e.a != e.b && p.side_contains(e.a) != p.side_contains(e.b)) cut += e.weight;
    }
    return cut / (side_volume < complement_volume ? side_volume : complement_volume);
}

// Modified-weight cut over the smaller volume for a partition of omega.
// Degrees agree with the original graph, so the volumes are plain measures;
// self-loops never enter the cut.
inline Rational modified_quotient(const ModifiedGraph& mg, const Partition& p) {
    const Domain& domain = mg.domain();
    if (p.universe() != Universe::Omega || p.members() != domain.omega()) {
        throw WrongUniverseError("expected a partition of omega of this domain");
    }
    Rational side_volume(0);
    for (int v : p.side()) side_volume += domain.graph().degree(v);
    const Rational complement_volume = domain.omega_measure() - side_volume;

    Rational cut(0);
    const auto complement = p.complement();
    for (int x : p.side()) {
        const int a = domain.omega_position(x);
        for (int y : complement) {
            cut += mg.weight(a, domain.omega_position(y));
        }
    }
    return cut / (side_volume < complement_volume ? side_volume : complement_volume);
}

namespace detail {

// One minimization instance: a universe of vertices with per-vertex volumes
// (zero for boundary vertices in the Neumann problem) and the cut edges in
// universe positions.
struct QuotientProblem {
    std::vector<int> members;  // graph indices, sorted
    std::vector<Rational> volume;
    std::vector<std::tuple<int, int, Rational>> cut_edges;  // positions, pa < pb
    Rational total_volume;
};

struct QuotientMinimum {
    Rational value;
    std::vector<std::uint32_t> side_masks;  // bit i = members[i]; bit 0 always clear
};

// Scans raw masks in [lo, hi); raw mask m encodes the side (m << 1), so
// bit 0 — the smallest universe vertex — is never in the side and each
// unordered partition appears exactly once, already as its canonical key.
inline void scan_masks(const QuotientProblem& p, std::uint32_t lo, std::uint32_t hi,
                       std::optional<QuotientMinimum>& out) {
    const int n = static_cast<int>(p.members.size());
    for (std::uint32_t raw = lo; raw < hi; ++raw) {
        const std::uint32_t mask = raw << 1;
        Rational side_volume(0);
        for (int i = 1; i < n; ++i) {
            if (mask & (1u << i)) side_volume += p.volume[static_cast<std::size_t>(i)];
        }
        const Rational complement_volume = p.total_volume - side_volume;
        if (side_volume == 0 || complement_volume == 0) continue;

        Rational cut(0);
        for (const auto& [pa, pb, w] : p.cut_edges) {
            if (((mask >> pa) ^ (mask >> pb)) & 1u) cut += w;
        }
        Rational q = cut / (side_volume < complement_volume ? side_volume : complement_volume);
        if (!out || q < out->value) {
            out = QuotientMinimum{std::move(q), {mask}};
        } else if (q == out->value) {
            out->side_masks.push_back(mask);
        }
    }
}

inline QuotientMinimum minimize_quotient(const QuotientProblem& p, const EnumerationOptions& opts) {
    const int n = static_cast<int>(p.members.size());
    if (n < 2) throw EmptyOrFullSubsetError("universe has no proper nonempty subsets");
    if (n > opts.limit) {
        throw TooLargeForExhaustiveError("universe of " + std::to_string(n) +
                                         " vertices exceeds the exhaustive limit of " +
                                         std::to_string(opts.limit));
    }
    // Masks run over bits 1..n-1; mask m encodes side {members[i] : bit i}.
    const std::uint32_t count = 1u << (n - 1);
    unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
    if (threads == 0) threads = 1;
    if (threads > 1 && count < 4096) threads = 1;

    std::vector<std::optional<QuotientMinimum>> partial(threads);
    if (threads == 1) {
        scan_masks(p, 1, count, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint32_t chunk = count / threads + 1;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint32_t lo = std::max<std::uint32_t>(1, t * chunk);
            const std::uint32_t hi = std::min<std::uint32_t>(count, (t + 1) * chunk);
            pool.emplace_back([&p, lo, hi, &slot = partial[t]] {
                if (lo < hi) scan_masks(p, lo, hi, slot);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Merge in range order: associative, so the result does not depend on
    // the worker count.
    std::optional<QuotientMinimum> best;
    for (auto& part : partial) {
        if (!part) continue;
        if (!best || part->value < best->value) {
            best = std::move(part);
        } else if (part->value == best->value) {
            best->side_masks.insert(best->side_masks.end(), part->side_masks.begin(),
                                    part->side_masks.end());
        }
    }
    if (!best) throw Error("no partition with finite quotient exists");

    // Masks are encoded so the doubled partition {S, S^v} is visited once;
    // mask order ascends per chunk and chunks are merged in order, giving a
    // deterministic, duplicate-free list.
    return *best;
}

inline std::vector<Partition> masks_to_partitions(const QuotientProblem& p, Universe universe,
                                                  const std::vector<std::uint32_t>& masks) {
    std::vector<Partition> out;
    out.reserve(masks.size());
    for (std::uint32_t mask : masks) {
        std::vector<int> side;
        for (std::size_t i = 0; i < p.members.size(); ++i) {
            if (mask & (1u << i)) side.push_back(p.members[i]);
        }
        out.emplace_back(universe, std::move(side), p.members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Exact minimum of the closure-partition quotient over all 2^|closure| - 2
// subsets, with the complete minimizer set.
inline CheegerResult neumann_cheeger(const Domain& domain, const EnumerationOptions& opts = {}) {
    detail::QuotientProblem p;
    p.members = domain.closure();
    p.volume.reserve(p.members.size());
    for (int v : p.members) {
        p.volume.push_back(domain.in_omega(v) ? domain.graph().degree(v) : Rational(0));
    }
    p.total_volume = domain.omega_measure();
    for (const auto& e : domain.edge_set()) {
        if (e.a == e.b) continue;
        int pa = domain.closure_position(e.a);
        int pb = domain.closure_position(e.b);
        if (pa > pb) std::swap(pa, pb);
        p.cut_edges.emplace_back(pa, pb, e.weight);
    }
    const auto min = detail::minimize_quotient(p, opts);
    return {min.value, detail::masks_to_partitions(p, Universe::Closure, min.side_masks),
            Universe::Closure, CheegerKind::Neumann};
}

// Exact Cheeger constant of the modified graph over partitions of omega.
inline CheegerResult modified_cheeger(const ModifiedGraph& mg, const EnumerationOptions& opts = {}) {
    const Domain& domain = mg.domain();
    detail::QuotientProblem p;
    p.members = domain.omega();
    p.volume.reserve(p.members.size());
    for (int v : p.members) p.volume.push_back(domain.graph().degree(v));
    p.total_volume = domain.omega_measure();
    const int k = mg.size();
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (mg.weight(a, b) > 0) p.cut_edges.emplace_back(a, b, mg.weight(a, b));
        }
    }
    const auto min = detail::minimize_quotient(p, opts);
    return {min.value, detail::masks_to_partitions(p, Universe::Omega, min.side_masks),
            Universe::Omega, CheegerKind::Modified};
}

// Classical Cheeger constant of a plain graph.
inline CheegerResult classical_cheeger(const WeightedGraph& graph,
                                       const EnumerationOptions& opts = {}) {
    detail::QuotientProblem p;
    p.members.resize(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v) p.members[static_cast<std::size_t>(v)] = v;
    p.volume.reserve(p.members.size());
    for (int v : p.members) p.volume.push_back(graph.degree(v));
    p.total_volume = graph.total_measure();
    for (const auto& e : graph.edges()) {
        if (e.a != e.b) p.cut_edges.emplace_back(e.a, e.b, e.weight);
    }
    const auto min = detail::minimize_quotient(p, opts);
    return {min.value, detail::masks_to_partitions(p, Universe::Graph, min.side_masks),
            Universe::Graph, CheegerKind::Classical};
}

// L1 quotient: total variation over E_Omega divided by the best-centred
// absolute deviation on omega. The inner infimum is attained at an
// m-weighted median; the lower weighted median is used, deterministically.
// Everything is exact.
inline Rational sobolev_quotient(const Domain& domain, const std::vector<Rational>& f_closure) {
    if (f_closure.size() != domain.closure().size()) throw Error("function size mismatch with closure");
    bool constant_on_closure = true;
    for (const auto& v : f_closure) {
        if (v != f_closure.front()) {
            constant_on_closure = false;
            break;
        }
    }
    if (constant_on_closure) throw ConstantFunctionError("function is constant on the closure");

    std::vector<std::pair<Rational, Rational>> weighted;  // (value on omega, mass)
    weighted.reserve(domain.omega().size());
    for (int x : domain.omega()) {
        weighted.emplace_back(f_closure[static_cast<std::size_t>(domain.closure_position(x))],
                              domain.graph().degree(x));
    }
    bool constant_on_omega = true;
    for (const auto& [v, m] : weighted) {
        if (v != weighted.front().first) {
            constant_on_omega = false;
            break;
        }
    }
    if (constant_on_omega) {
        throw ZeroDenominatorError("function is constant on omega; the denominator vanishes");
    }

    Rational numerator(0);
    for (const auto& e : domain.edge_set()) {
        const Rational diff = f_closure[static_cast<std::size_t>(domain.closure_position(e.a))] -
                              f_closure[static_cast<std::size_t>(domain.closure_position(e.b))];
        numerator += (diff < 0 ? -diff : diff) * e.weight;
    }

    std::sort(weighted.begin(), weighted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const Rational half = domain.omega_measure() / 2;
    Rational cumulative(0);
    Rational median = weighted.back().first;
    for (const auto& [v, m] : weighted) {
        cumulative += m;
        if (cumulative >= half) {
            median = v;
            break;
        }
    }

    Rational denominator(0);
    for (const auto& [v, m] : weighted) {
        const Rational d = v - median;
        denominator += (d < 0 ? -d : d) * m;
    }
    return numerator / denominator;
}

struct CoareaTerms {
    Rational total_variation;    // sum over E_Omega of |f(x)-f(y)| w(x,y)
    Rational levelset_integral;  // sum over threshold intervals of length * level-set cut
};

// Both sides of the discrete coarea identity, computed independently so the
// equality can be asserted exactly.
inline CoareaTerms coarea_identity(const Domain& domain, const std::vector<Rational>& f_closure) {
    if (f_closure.size() != domain.closure().size()) throw Error("function size mismatch with closure");

    CoareaTerms terms{Rational(0), Rational(0)};
    for (const auto& e : domain.edge_set()) {
        const Rational diff = f_closure[static_cast<std::size_t>(domain.closure_position(e.a))] -
                              f_closure[static_cast<std::size_t>(domain.closure_position(e.b))];
        terms.total_variation += (diff < 0 ? -diff : diff) * e.weight;
    }

    std::vector<Rational> values = f_closure;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) return terms;

    const auto rank = [&](const Rational& v) {
        return static_cast<std::size_t>(
            std::lower_bound(values.begin(), values.end(), v) - values.begin());
    };

    // Difference array over threshold intervals (v_i, v_{i+1}]; an edge cuts
    // every interval between its endpoint values.
    std::vector<Rational> diff(values.size(), Rational(0));
    for (const auto& e : domain.edge_set()) {
        const Rational& fa = f_closure[static_cast<std::size_t>(domain.closure_position(e.a))];
        const Rational& fb = f_closure[static_cast<std::size_t>(domain.closure_position(e.b))];
        if (fa == fb) continue;
        const std::size_t lo = rank(fa < fb ? fa : fb);
        const std::size_t hi = rank(fa < fb ? fb : fa);
        diff[lo] += e.weight;
        diff[hi] -= e.weight;
    }
    Rational level_cut(0);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        level_cut += diff[i];
        terms.levelset_integral += (values[i + 1] - values[i]) * level_cut;
    }
    return terms;
}

struct SweepResult {
    Partition partition;  // of the closure
    Rational value;       // exact quotient of that partition
};

// Thresholds a function on the closure at midpoints between consecutive
// distinct values, evaluates the exact quotient of every super-level set for
// both orientations, and returns the best cut found. Always an upper bound
// for the exhaustive minimum, and usable beyond the enumeration limit.
inline SweepResult sweep_cut(const Domain& domain, const std::vector<double>& f_closure) {
    if (f_closure.size() != domain.closure().size()) throw Error("function size mismatch with closure");

    std::optional<SweepResult> best;
    for (int orientation = 0; orientation < 2; ++orientation) {
        std::vector<double> g = f_closure;
        if (orientation == 1) {
            for (auto& v : g) v = -v;
        }
        std::vector<double> values = g;
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (values.size() < 2) throw ConstantFunctionError("function is constant on the closure");

        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            const double t = 0.5 * (values[i] + values[i + 1]);
            std::vector<int> side;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (g[j] > t) side.push_back(domain.closure()[j]);
            }
            Partition p(Universe::Closure, std::move(side), domain.closure());
            const auto q = neumann_quotient(domain, p);
            if (!q) continue;
            if (!best || *q < best->value) best = SweepResult{std::move(p), *q};
        }
    }
    if (!best) {
        throw ConstantFunctionError("function is constant on omega; every sweep cut is degenerate");
    }
    return *best;
}

// Weight from each boundary vertex into the two sides of a partition of
// omega. `doubly_attached` collects the boundary vertices attached to both.
struct BoundaryAttachment {
    std::vector<int> boundary;            // graph indices, domain order
    std::vector<Rational> side_mass;      // toward p.side()
    std::vector<Rational> complement_mass;
    std::vector<int> doubly_attached;
};

inline BoundaryAttachment boundary_attachment(const Domain& domain, const Partition& p) {
    if (p.universe() != Universe::Omega || p.members() != domain.omega()) {
        throw WrongUniverseError("expected a partition of omega of this domain");
    }
    BoundaryAttachment att;
    att.boundary = domain.boundary();
    att.side_mass.reserve(att.boundary.size());
    att.complement_mass.reserve(att.boundary.size());
    for (int z : att.boundary) {
        Rational toward_side(0);
        for (int x : p.side()) toward_side += domain.graph().weight(x, z);
        Rational toward_complement = domain.boundary_measure(z) - toward_side;
        if (toward_side > 0 && toward_complement > 0) att.doubly_attached.push_back(z);
        att.side_mass.push_back(std::move(toward_side));
        att.complement_mass.push_back(std::move(toward_complement));
    }
    return att;
}

// Lifts a partition {A, B} of omega to the closure: boundary vertices attach
// to the side holding more of their weight; vertices torn evenly go to B
// unless listed in `tie_vertices`. The lifted cut quotient never exceeds
// twice the modified quotient of {A, B}.
inline Partition lift_partition(const Domain& domain, const Partition& p,
                                const std::set<std::string>& tie_vertices = {}) {
    const auto att = boundary_attachment(domain, p);

    std::set<int> ties;
    for (const auto& name : tie_vertices) {
        const int z = domain.graph().index_of(name);
        bool eligible = false;
        for (std::size_t i = 0; i < att.boundary.size(); ++i) {
            if (att.boundary[i] == z) {
                eligible = att.side_mass[i] > 0 && att.side_mass[i] == att.complement_mass[i];
                break;
            }
        }
        if (!eligible) {
            throw Error("tie vertex '" + name + "' is not an evenly attached boundary vertex");
        }
        ties.insert(z);
    }

    std::vector<int> side = p.side();
    for (std::size_t i = 0; i < att.boundary.size(); ++i) {
        const int z = att.boundary[i];
        if (att.complement_mass[i] == 0 || att.side_mass[i] > att.complement_mass[i] ||
            ties.count(z)) {
            side.push_back(z);
        }
    }
    std::sort(side.begin(), side.end());
    return Partition(Universe::Closure, std::move(side), domain.closure());
}

// Every lift over the admissible tie sets.
inline std::vector<Partition> lift_partition_variants(const Domain& domain, const Partition& p) {
    const auto att = boundary_attachment(domain, p);
    std::vector<std::string> tie_names;
    for (std::size_t i = 0; i < att.boundary.size(); ++i) {
        if (att.side_mass[i] > 0 && att.side_mass[i] == att.complement_mass[i]) {
            tie_names.push_back(domain.graph().name(att.boundary[i]));
        }
    }
    std::vector<Partition> out;
    const std::size_t variants = std::size_t(1) << tie_names.size();
    out.reserve(variants);
    for (std::size_t mask = 0; mask < variants; ++mask) {
        std::set<std::string> ties;
        for (std::size_t i = 0; i < tie_names.size(); ++i) {
            if (mask & (std::size_t(1) << i)) ties.insert(tie_names[i]);
        }
        out.push_back(lift_partition(domain, p, ties));
    }
    return out;
}

struct EqualityViolation {
    Partition partition;
    std::string vertex;  // empty when the violation is a direct edge between the sides
    std::string reason;
};

// Result of one equality characterization: `holds` is the exact equality of
// the two constants, `predicate` the combinatorial condition on minimizer
// sets that is supposed to be equivalent to it.
struct EqualityReport {
    bool holds = false;
    bool predicate = false;
    Rational neumann_value;
    Rational modified_value;
    std::vector<Partition> intersection;  // minimizers of both problems, as partitions of omega
    std::vector<EqualityViolation> violations;
};

namespace detail {

// Partitions of omega induced by restricting closure partitions, deduplicated.
inline std::vector<Partition> induced_omega_partitions(const Domain& domain,
                                                       const std::vector<Partition>& closure_parts) {
    std::set<Partition> dedup;
    for (const auto& cp : closure_parts) {
        std::vector<int> side;
        for (int v : cp.side()) {
            if (domain.in_omega(v)) side.push_back(v);
        }
        // Minimizing closure partitions always meet omega on both sides.
        dedup.insert(Partition(Universe::Omega, std::move(side), domain.omega()).canonical());
    }
    return {dedup.begin(), dedup.end()};
}

inline std::vector<Partition> partition_intersection(const std::vector<Partition>& a,
                                                     const std::vector<Partition>& b) {
    std::vector<Partition> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

// Characterizes when the modified constant equals the Neumann constant: the
// minimizer sets must share a partition of omega, and every shared minimizer
// must attach each boundary vertex to one side only.
inline EqualityReport check_lower_equality(const Domain& domain,
                                           const EnumerationOptions& opts = {}) {
    const auto hn = neumann_cheeger(domain, opts);
    const auto ht = modified_cheeger(build_modified_graph(domain), opts);

    EqualityReport report;
    report.neumann_value = hn.value;
    report.modified_value = ht.value;
    report.holds = ht.value == hn.value;
    report.intersection =
        detail::partition_intersection(ht.minimizers, detail::induced_omega_partitions(domain, hn.minimizers));

    for (const auto& p : report.intersection) {
        const auto att = boundary_attachment(domain, p);
        for (std::size_t i = 0; i < att.boundary.size(); ++i) {
            if (att.side_mass[i] > 0 && att.complement_mass[i] > 0) {
                report.violations.push_back(
                    {p, domain.graph().name(att.boundary[i]),
                     "boundary vertex attaches to both sides (" +
                         render_rational(att.side_mass[i]) + " and " +
                         render_rational(att.complement_mass[i]) + ")"});
            }
        }
    }
    report.predicate = !report.intersection.empty() && report.violations.empty();
    return report;
}

// Characterizes when the Neumann constant equals twice the modified one: a
// shared minimizer must exist, have no direct edge between its sides, and
// every boundary vertex must attach to one side only or evenly to both.
inline EqualityReport check_upper_equality(const Domain& domain,
                                           const EnumerationOptions& opts = {}) {
    const auto hn = neumann_cheeger(domain, opts);
    const auto ht = modified_cheeger(build_modified_graph(domain), opts);

    EqualityReport report;
    report.neumann_value = hn.value;
    report.modified_value = ht.value;
    report.holds = hn.value == 2 * ht.value;
    report.intersection =
        detail::partition_intersection(ht.minimizers, detail::induced_omega_partitions(domain, hn.minimizers));

    for (const auto& p : report.intersection) {
        Rational direct(0);
        const auto complement = p.complement();
        for (int x : p.side()) {
            for (int y : complement) direct += domain.graph().weight(x, y);
        }
        if (direct > 0) {
            report.violations.push_back(
                {p, "", "direct edges of total weight " + render_rational(direct) +
                            " connect the sides"});
        }
        const auto att = boundary_attachment(domain, p);
        for (std::size_t i = 0; i < att.boundary.size(); ++i) {
            if (att.side_mass[i] > 0 && att.complement_mass[i] > 0 &&
                att.side_mass[i] != att.complement_mass[i]) {
                report.violations.push_back(
                    {p, domain.graph().name(att.boundary[i]),
                     "boundary vertex attaches unevenly to both sides (" +
                         render_rational(att.side_mass[i]) + " and " +
                         render_rational(att.complement_mass[i]) + ")"});
            }
        }
    }
    report.predicate = !report.intersection.empty() && report.violations.empty();
    return report;
}

}  // namespace ncheeger
