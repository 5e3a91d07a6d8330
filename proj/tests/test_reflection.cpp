#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ncheeger;
using namespace testutil;

namespace {
int pos(const ModifiedGraph& mg, const std::string& name) {
    return mg.domain().omega_position(mg.domain().graph().index_of(name));
}
}  // namespace

TEST_CASE("path2 ends: one reflection through the middle vertex") {
    const auto mg = build_modified_graph(path2_ends());
    const int v1 = pos(mg, "v1");
    const int v3 = pos(mg, "v3");
    CHECK(mg.weight(v1, v3) == Rational(1, 2));
    CHECK(mg.weight(v1, v1) == Rational(1, 2));
    CHECK(mg.weight(v3, v3) == Rational(1, 2));
    CHECK(mg.degree(v1) == 1);
    CHECK(mg.degree(v3) == 1);
    CHECK(mg.connected());
}

TEST_CASE("triangle with heavy sides: bridge weight 1 + a/2") {
    const auto mg = build_modified_graph(triangle_sides(10));
    const int v1 = pos(mg, "v1");
    const int v3 = pos(mg, "v3");
    CHECK(mg.weight(v1, v3) == 6);       // 1 + a/2
    CHECK(mg.weight(v1, v1) == 5);       // a^2 / (2a)
    CHECK(mg.weight(v3, v3) == 5);
    CHECK(mg.degree(v1) == 11);
}

TEST_CASE("path3 middle: single-neighbour boundary reflects straight back") {
    const auto mg = build_modified_graph(path3_middle());
    const int v2 = pos(mg, "v2");
    const int v3 = pos(mg, "v3");
    CHECK(mg.weight(v2, v3) == 1);
    CHECK(mg.weight(v2, v2) == 1);
    CHECK(mg.weight(v3, v3) == 1);
}

TEST_CASE("as_plain_graph round trips weights and degrees") {
    const auto plain = as_plain_graph(build_modified_graph(path2_ends()));
    REQUIRE(plain.vertex_count() == 2);
    CHECK(plain.weight(plain.index_of("v1"), plain.index_of("v3")) == Rational(1, 2));
    CHECK(plain.weight(plain.index_of("v1"), plain.index_of("v1")) == Rational(1, 2));
    CHECK(plain.degree(plain.index_of("v1")) == 1);
    CHECK(plain.degree(plain.index_of("v3")) == 1);
}

TEST_CASE("interior-connected omega keeps its off-diagonal weights") {
    // square cycle; omega on one side, each boundary vertex has one omega
    // neighbour, so reflection only adds self-loops
    const auto g = build_graph({{"v1", "v2", Rational(1)},
                                {"v2", "v3", Rational(1)},
                                {"v3", "v4", Rational(1)},
                                {"v4", "v1", Rational(1)}});
    const auto d = build_domain(g, {"v1", "v2"});
    const auto mg = build_modified_graph(d);
    const int v1 = pos(mg, "v1");
    const int v2 = pos(mg, "v2");
    CHECK(mg.weight(v1, v2) == g.weight(g.index_of("v1"), g.index_of("v2")));
    CHECK(mg.weight(v1, v1) == 1);
    CHECK(mg.weight(v2, v2) == 1);
}

TEST_CASE("omega split by a long boundary path comes out disconnected") {
    const auto g = build_graph({{"v1", "v2", Rational(1)},
                                {"v2", "v3", Rational(1)},
                                {"v3", "v4", Rational(1)},
                                {"v4", "v5", Rational(1)}});
    const auto d = build_domain(g, {"v1", "v4"});
    const auto mg = build_modified_graph(d);
    CHECK_FALSE(mg.connected());
    CHECK(mg.weight(pos(mg, "v1"), pos(mg, "v4")) == 0);
    CHECK_THROWS_AS(as_plain_graph(mg), DisconnectedGraphError);
}

TEST_CASE("random suite: degree preservation, symmetry, reduction sanity") {
    std::mt19937_64 rng(11);
    int reduction_cases = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const Domain d = random_instance(rng);
        const auto mg = build_modified_graph(d);
        const auto& g = d.graph();
        const int k = mg.size();

        for (int a = 0; a < k; ++a) {
            Rational row(0);
            for (int b = 0; b < k; ++b) {
                row += mg.weight(a, b);
                REQUIRE(mg.weight(a, b) == mg.weight(b, a));
            }
            REQUIRE(row == g.degree(d.omega()[static_cast<std::size_t>(a)]));
        }

        // when no boundary vertex sees two omega vertices, off-diagonal
        // weights are untouched
        bool no_double_attachment = true;
        for (int z : d.boundary()) {
            int omega_neighbours = 0;
            for (int y : d.omega()) {
                if (g.weight(z, y) > 0) ++omega_neighbours;
            }
            if (omega_neighbours > 1) no_double_attachment = false;
        }
        if (no_double_attachment) {
            ++reduction_cases;
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) {
                    REQUIRE(mg.weight(a, b) ==
                            g.weight(d.omega()[static_cast<std::size_t>(a)],
                                     d.omega()[static_cast<std::size_t>(b)]));
                }
            }
        }
    }
    CHECK(reduction_cases > 0);
}

TEST_CASE("walk is deterministic and counts every step") {
    const auto d = path2_ends();
    const auto a = simulate_reflected_walk(d, "v1", 5000, 99);
    const auto b = simulate_reflected_walk(d, "v1", 5000, 99);
    CHECK(a.counts == b.counts);
    const auto c = simulate_reflected_walk(d, "v1", 5000, 100);
    CHECK(a.counts != c.counts);

    std::uint64_t total = 0;
    for (auto n : a.counts) total += n;
    CHECK(total == 5000);

    const auto single = simulate_reflected_walk(d, "v1", 1, 1);
    std::uint64_t single_total = 0;
    for (auto n : single.counts) single_total += n;
    CHECK(single_total == 1);
}

TEST_CASE("walk rejects bad starts") {
    const auto d = path2_ends();
    CHECK_THROWS_AS(simulate_reflected_walk(d, "v2", 10, 0), InvalidStartError);
    CHECK_THROWS_AS(simulate_reflected_walk(d, "nope", 10, 0), InvalidStartError);
    CHECK_THROWS_AS(simulate_reflected_walk(d, "v1", 0, 0), Error);
}

TEST_CASE("walk frequencies approach the modified transition probabilities") {
    const auto d = path2_ends();
    const auto mg = build_modified_graph(d);
    const auto counts = simulate_reflected_walk(d, "v1", 200000, 2024);
    for (int a = 0; a < mg.size(); ++a) {
        const auto row_total = counts.row_total(a);
        REQUIRE(row_total > 0);
        for (int b = 0; b < mg.size(); ++b) {
            const double exact = to_double(
                mg.weight(a, b) / d.graph().degree(d.omega()[static_cast<std::size_t>(a)]));
            const double empirical =
                static_cast<double>(counts.count(a, b)) / static_cast<double>(row_total);
            CHECK(std::abs(empirical - exact) < 0.02);
        }
    }
}

TEST_CASE("walk visits both targets from the middle of path3") {
    // from v2 the effective chain moves to v2 (reflection at v1) or v3 with
    // probability 1/2 each
    const auto d = path3_middle();
    const auto counts = simulate_reflected_walk(d, "v2", 100000, 5);
    const int v2 = d.omega_position(d.graph().index_of("v2"));
    const int v3 = d.omega_position(d.graph().index_of("v3"));
    const double to_self = static_cast<double>(counts.count(v2, v2)) /
                           static_cast<double>(counts.row_total(v2));
    const double across = static_cast<double>(counts.count(v2, v3)) /
                          static_cast<double>(counts.row_total(v2));
    CHECK(std::abs(to_self - 0.5) < 0.02);
    CHECK(std::abs(across - 0.5) < 0.02);
}
