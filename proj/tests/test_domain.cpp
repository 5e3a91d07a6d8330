#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ncheeger;
using namespace testutil;

TEST_CASE("path2 domain with omega at the ends") {
    const auto d = path2_ends();
    const auto& g = d.graph();
    REQUIRE(d.boundary().size() == 1);
    CHECK(g.name(d.boundary()[0]) == "v2");
    CHECK(d.boundary_measure(g.index_of("v2")) == 2);
    CHECK(d.closure().size() == 3);
    CHECK(d.edge_set().size() == 2);  // {v1,v2} and {v2,v3}
    CHECK(d.omega_measure() == 2);
}

TEST_CASE("path3 domain with omega in the middle") {
    const auto d = path3_middle();
    const auto& g = d.graph();
    REQUIRE(d.boundary().size() == 2);
    CHECK(g.name(d.boundary()[0]) == "v1");
    CHECK(g.name(d.boundary()[1]) == "v4");
    CHECK(d.boundary_measure(g.index_of("v1")) == 1);
    CHECK(d.boundary_measure(g.index_of("v4")) == 1);
    CHECK(d.edge_set().size() == 3);
}

TEST_CASE("domain construction failures") {
    const auto triangle = build_graph({{"v1", "v2", Rational(1)},
                                       {"v2", "v3", Rational(1)},
                                       {"v1", "v3", Rational(1)}});
    CHECK_THROWS_AS(build_domain(triangle, {"v1", "v2", "v3"}), EmptyVertexBoundaryError);
    CHECK_THROWS_AS(build_domain(triangle, {"v1"}), OmegaTooSmallError);
    CHECK_THROWS_AS(build_domain(triangle, {"v1", "nope"}), UnknownVertexError);
}

TEST_CASE("measure of closure subsets") {
    const auto d = path2_ends();
    CHECK(measure(d, {"v1"}) == 1);
    CHECK(measure(d, {}) == 0);
    CHECK(measure(d, {"v2"}) == 0);  // boundary vertex contributes nothing
    CHECK(measure(d, {"v1", "v2", "v3"}) == 2);
    CHECK_THROWS_AS(measure(d, {"v9"}), UnknownVertexError);

    const auto tri = triangle_sides(10);
    CHECK(measure(tri, {"v1", "v2"}) == 11);  // m_v1 = 1 + a, v2 is boundary
}

TEST_CASE("cut weights over the domain edge set") {
    const auto d = path2_ends();
    CHECK(cut_weight(d, {"v1"}) == 1);
    CHECK(cut_weight(d, {"v1", "v2"}) == 1);
    CHECK_THROWS_AS(cut_weight(d, {}), EmptyOrFullSubsetError);
    CHECK_THROWS_AS(cut_weight(d, {"v1", "v2", "v3"}), EmptyOrFullSubsetError);

    const auto tri = triangle_sides(10);
    CHECK(cut_weight(tri, {"v1"}) == 11);  // edges {v1,v3} weight 1 and {v1,v2} weight 10
}

TEST_CASE("boundary vertices outside omega never join the edge set twice") {
    // edges inside the boundary are excluded from E_Omega
    const auto g = build_graph({{"a", "b", Rational(1)},
                                {"b", "c", Rational(1)},
                                {"c", "d", Rational(1)},
                                {"b", "d", Rational(1)}});
    const auto d = build_domain(g, {"a", "c"});
    for (const auto& e : d.edge_set()) {
        CHECK((d.in_omega(e.a) || d.in_omega(e.b)));
    }
    // {b,d} has both endpoints in the boundary
    CHECK(d.edge_set().size() == 3);
}

TEST_CASE("random suite: boundary recomputation, cut symmetry, measure additivity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Domain d = random_instance(rng);
        const auto& g = d.graph();

        // boundary from scratch at the name level
        std::set<std::string> omega_names, boundary_names;
        for (int x : d.omega()) omega_names.insert(g.name(x));
        for (int z = 0; z < g.vertex_count(); ++z) {
            if (omega_names.count(g.name(z))) continue;
            for (int y : d.omega()) {
                if (g.weight(z, y) > 0) {
                    boundary_names.insert(g.name(z));
                    break;
                }
            }
        }
        std::set<std::string> reported;
        for (int z : d.boundary()) reported.insert(g.name(z));
        REQUIRE(reported == boundary_names);

        for (int z : d.boundary()) CHECK(d.boundary_measure(z) > 0);

        // a random subset of the closure
        std::set<std::string> side, complement;
        for (int v : d.closure()) {
            (rand_bool(rng) ? side : complement).insert(g.name(v));
        }
        CHECK(measure(d, side) + measure(d, complement) == d.omega_measure());
        if (!side.empty() && !complement.empty()) {
            CHECK(cut_weight(d, side) == cut_weight(d, complement));
        }
    }
}

TEST_CASE("partition canonicalization") {
    const auto d = path2_ends();
    const auto p1 = Partition::of_closure(d, {"v1"});
    const auto p2 = Partition::of_closure(d, {"v2", "v3"});
    CHECK(p1 == p2);
    CHECK_FALSE(p1 < p2);
    CHECK_FALSE(p2 < p1);
    // the canonical key avoids the smallest closure vertex
    const auto& g = d.graph();
    std::set<std::string> key;
    for (int v : p1.canonical_key()) key.insert(g.name(v));
    CHECK(key == std::set<std::string>{"v2", "v3"});

    const auto q = Partition::of_closure(d, {"v2"});
    CHECK_FALSE(p1 == q);

    CHECK_THROWS_AS(Partition::of_closure(d, {}), EmptyOrFullSubsetError);
    CHECK_THROWS_AS(Partition::of_closure(d, {"v1", "v2", "v3"}), EmptyOrFullSubsetError);
    CHECK_THROWS_AS(Partition::of_omega(d, {"v2"}), WrongUniverseError);  // v2 is boundary

    const auto po = Partition::of_omega(d, {"v3"});
    CHECK(po.universe() == Universe::Omega);
    CHECK(po.complement() == std::vector<int>{g.index_of("v1")});
}
