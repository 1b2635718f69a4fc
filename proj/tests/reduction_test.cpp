#include <doctest.h>

#include <random>
#include <set>

#include "cbnlab/reduction.hpp"
#include "oracles.hpp"

using namespace cbnlab;

TEST_CASE("the running example reduces to cycles of length 2, 3 and 6") {
    const Digraph g = testing::fig2_graph();
    const ReducedSystem rs = build_reduced(g);

    CHECK(rs.h.vertex_count() == 11); // 2 + 3 + 6
    REQUIRE(rs.component_count() == 3);
    CHECK(rs.loop_number_of(0) == 2);
    CHECK(rs.loop_number_of(1) == 3);
    CHECK(rs.loop_number_of(2) == 6);

    // Each component is exactly its cycle, plus the two inherited cross
    // edges: class {1} -> class {5} and class {4} -> class {7, 12}.
    std::set<std::pair<int, int>> expected;
    for (int j = 0; j < 2; ++j) expected.emplace(rs.hvertex[0][j], rs.hvertex[0][(j + 1) % 2]);
    for (int j = 0; j < 3; ++j) expected.emplace(rs.hvertex[1][j], rs.hvertex[1][(j + 1) % 3]);
    for (int j = 0; j < 6; ++j) expected.emplace(rs.hvertex[2][j], rs.hvertex[2][(j + 1) % 6]);
    expected.emplace(rs.hvertex[0][1], rs.hvertex[2][0]);
    expected.emplace(rs.hvertex[1][2], rs.hvertex[2][2]);
    std::set<std::pair<int, int>> actual(rs.h.edges().begin(), rs.h.edges().end());
    CHECK(actual == expected);
}

TEST_CASE("a plain cycle is its own reduced system") {
    const Digraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const ReducedSystem rs = build_reduced(g);
    CHECK(rs.h == g);
}

TEST_CASE("reduction invariants on random graphs") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 50; ++trial) {
        const Digraph g = testing::random_trimmed_connected(rng, 4, 14);
        const ReducedSystem rs = build_reduced(g);

        // |V(H)| is the total class count.
        int expected_vertices = 0;
        for (const int p : rs.cp.loop_numbers) expected_vertices += std::max(p, 1);
        CHECK(rs.h.vertex_count() == expected_vertices);

        // H's strong components are exactly the recorded cycles, with the
        // same numbering and loop numbers as G's components.
        const auto h_scd = scc_decompose(rs.h);
        REQUIRE(h_scd.component_count() == rs.component_count());
        for (int i = 0; i < rs.component_count(); ++i) {
            std::vector<int> expected_comp = rs.hvertex[static_cast<std::size_t>(i)];
            std::sort(expected_comp.begin(), expected_comp.end());
            CHECK(h_scd.components[static_cast<std::size_t>(i)] == expected_comp);
            CHECK(loop_number(rs.h, h_scd.components[static_cast<std::size_t>(i)]) == rs.loop_number_of(i));
        }

        // Cross edges exist in H exactly where a G-edge joins the classes.
        std::set<std::pair<int, int>> class_pairs;
        for (const auto& [u, v] : g.edges()) {
            const int cu = rs.scd.comp_of[static_cast<std::size_t>(u)];
            const int cv = rs.scd.comp_of[static_cast<std::size_t>(v)];
            if (cu == cv) continue;
            class_pairs.emplace(
                rs.hvertex[static_cast<std::size_t>(cu)]
                          [static_cast<std::size_t>(rs.cp.class_of[static_cast<std::size_t>(u)])],
                rs.hvertex[static_cast<std::size_t>(cv)]
                          [static_cast<std::size_t>(rs.cp.class_of[static_cast<std::size_t>(v)])]);
        }
        for (const auto& [hu, hv] : rs.h.edges()) {
            if (rs.h_comp[static_cast<std::size_t>(hu)] == rs.h_comp[static_cast<std::size_t>(hv)]) continue;
            CHECK(class_pairs.count({hu, hv}) == 1);
            class_pairs.erase({hu, hv});
        }
        CHECK(class_pairs.empty());

        // The condensations agree as ordered sets (same component indexing).
        CHECK(h_scd.condensation == rs.scd.condensation);
        CHECK(h_scd.level == rs.scd.level);
    }
}

TEST_CASE("build_reduced rejects untrimmed or disconnected graphs") {
    const Digraph untrimmed(3, {{0, 1}, {1, 2}, {2, 1}});
    CHECK_THROWS_WITH_AS(build_reduced(untrimmed), doctest::Contains("trim"), std::invalid_argument);
    const Digraph split(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    CHECK_THROWS_AS(build_reduced(split), std::invalid_argument);
}

TEST_CASE("induce and lift") {
    const Digraph g = testing::fig2_graph();
    const ReducedSystem rs = build_reduced(g);
    const BitState ones(g.vertex_count(), true);
    CHECK(induce_state(rs, ones).all_ones());

    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        BitState x(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) x.set(i, (rng() & 1u) != 0);
        const BitState y = induce_state(rs, x);
        // Definitional: the H-bit is 1 iff the class is constant 1.
        for (int u = 0; u < rs.h.vertex_count(); ++u) {
            bool expected = true;
            for (const int v : rs.class_of(u)) expected = expected && x.get(v);
            CHECK(y.get(u) == expected);
        }
        // Composition identities.
        CHECK(lift_state(rs, y) == class_saturate(x, rs.cp));
        CHECK(induce_state(rs, lift_state(rs, y)) == y);
    }
}

TEST_CASE("lifting an H-orbit state lands in a G-orbit") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        const Digraph g = testing::random_trimmed_connected(rng, 4, 12);
        const ReducedSystem rs = build_reduced(g);
        BitState y0(rs.h.vertex_count());
        for (int i = 0; i < rs.h.vertex_count(); ++i) y0.set(i, (rng() & 1u) != 0);
        const auto hit = find_orbit(rs.h, y0);
        for (const auto& y : hit.orbit.states) {
            const BitState x = lift_state(rs, y);
            CHECK(find_orbit(g, x).transient == 0);
        }
    }
}

TEST_CASE("settling: all-ones passes immediately") {
    const Digraph g = testing::fig2_graph();
    const auto report = verify_theorem1(g, BitState(g.vertex_count(), true));
    CHECK(report.passed());
    CHECK(report.settle_time == 0);
    CHECK(report.g_period == 1);
    CHECK(report.h_period == 1);
}

TEST_CASE("settling clauses hold exhaustively on the running example") {
    const Digraph g = testing::fig2_graph();
    for (std::uint64_t x0 = 0; x0 < (std::uint64_t{1} << g.vertex_count()); ++x0) {
        const auto report = verify_theorem1(g, testing::word_state(g, x0));
        REQUIRE_MESSAGE(report.passed(), report.failure_detail);
    }
}

TEST_CASE("settling clauses hold on random graphs with matching periods") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const Digraph g = testing::random_trimmed_connected(rng, 4, 16);
        for (int k = 0; k < 25; ++k) {
            BitState x(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i) x.set(i, (rng() & 1u) != 0);
            const auto report = verify_theorem1(g, x);
            REQUIRE_MESSAGE(report.passed(), report.failure_detail);
            CHECK(report.g_period == report.h_period);
        }
    }
}

TEST_CASE("orbit periods divide the lcm of positive loop numbers") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 30; ++trial) {
        const Digraph g = testing::random_trimmed_connected(rng, 4, 12);
        const ReducedSystem rs = build_reduced(g);
        const std::uint64_t n_g = rs.positive_lcm();
        for (int k = 0; k < 20; ++k) {
            BitState x(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i) x.set(i, (rng() & 1u) != 0);
            const auto hit = find_orbit(g, x);
            CHECK(n_g % static_cast<std::uint64_t>(hit.orbit.period()) == 0);
        }
    }
}
