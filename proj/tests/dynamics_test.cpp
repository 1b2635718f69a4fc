#include <doctest.h>

#include <random>
#include <set>

#include "cbnlab/dynamics.hpp"
#include "oracles.hpp"

using namespace cbnlab;

TEST_CASE("trim removes cascading sources") {
    const Digraph path(3, {{0, 1}, {1, 2}});
    const auto all_gone = trim(path);
    CHECK(all_gone.graph.vertex_count() == 0);
    CHECK(all_gone.removed == std::vector<int>{0, 1, 2});
    CHECK(all_gone.depth == 3);

    // A pendant source feeding a cycle disappears; the cycle stays.
    const Digraph pendant(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
    const auto tr = trim(pendant);
    CHECK(tr.removed == std::vector<int>{0});
    CHECK(tr.kept == std::vector<int>{1, 2, 3});
    CHECK(tr.graph.vertex_count() == 3);
    CHECK(tr.depth == 1);
}

TEST_CASE("every surviving vertex of a trimmed graph has an in-neighbor") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const Digraph g = testing::random_digraph(rng, 15, 20);
        const auto tr = trim(g);
        for (int v = 0; v < tr.graph.vertex_count(); ++v) CHECK(tr.graph.in_degree(v) >= 1);
        CHECK(tr.graph.vertex_count() + static_cast<int>(tr.removed.size()) == 15);
        // Removed vertices really are forced to 1 by time `depth`.
        const BitState zeros(15);
        const BitState settled = simulate(g, zeros, static_cast<std::uint64_t>(tr.depth));
        for (const int v : tr.removed) CHECK(settled.get(v));
    }
}

TEST_CASE("step basics") {
    const Digraph g = testing::fig2_graph();
    const BitState ones(g.vertex_count(), true);
    const BitState zeros(g.vertex_count());
    CHECK(step(g, ones) == ones);
    CHECK(step(g, zeros) == zeros);
    CHECK_THROWS_AS(step(g, BitState(3)), std::invalid_argument);

    const Digraph four(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(step(four, BitState::from_string("1010")) == BitState::from_string("0101"));
}

TEST_CASE("step agrees with the definitional oracle and the engine") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const Digraph g = testing::random_digraph(rng, n, 2 * n);
        const CbnEngine engine(g);
        for (int k = 0; k < 8; ++k) {
            const std::uint64_t x = rng() & ((std::uint64_t{1} << n) - 1);
            const std::uint64_t expected = testing::naive_step_word(g, x);
            CHECK(step(g, testing::word_state(g, x)).low_word() == expected);
            CHECK(engine.step_word(x) == expected);
            CHECK(engine.step(testing::word_state(g, x)).low_word() == expected);
        }
    }
}

TEST_CASE("engine wide path matches the narrow path") {
    // Same structure duplicated across the 64-bit boundary.
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 70; ++i) es.emplace_back(i, (i + 1) % 70);
    es.emplace_back(0, 35);
    const Digraph g(70, es);
    const CbnEngine engine(g);
    std::mt19937_64 rng(23);
    BitState x(70);
    for (int i = 0; i < 70; ++i) x.set(i, (rng() & 1u) != 0);
    const BitState via_engine = engine.step(x);
    const BitState via_free = step(g, x);
    CHECK(via_engine == via_free);
}

TEST_CASE("simulate composes step and is the identity at t=0") {
    const Digraph g = testing::fig2_graph();
    std::mt19937_64 rng(24);
    BitState x(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) x.set(i, (rng() & 1u) != 0);
    CHECK(simulate(g, x, 0) == x);
    CHECK(simulate(g, x, 3) == step(g, step(g, step(g, x))));
}

TEST_CASE("unrolled form: t steps equal the depth-t in-neighborhood product") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const Digraph g = testing::random_digraph(rng, n, 2 * n);
        const auto masks = testing::reach_masks(g, 12);
        const std::uint64_t x0 = rng() & ((std::uint64_t{1} << n) - 1);
        for (int t = 0; t <= 12; ++t) {
            CHECK(simulate(g, testing::word_state(g, x0), static_cast<std::uint64_t>(t)).low_word() ==
                  testing::eval_masks(masks[static_cast<std::size_t>(t)], x0));
        }
    }
}

TEST_CASE("monotonicity: dominating states stay dominating") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const Digraph g = testing::random_digraph(rng, n, 2 * n);
        const std::uint64_t lo = rng() & ((std::uint64_t{1} << n) - 1);
        const std::uint64_t hi = lo | (rng() & ((std::uint64_t{1} << n) - 1));
        BitState a = testing::word_state(g, hi);
        BitState b = testing::word_state(g, lo);
        for (int t = 0; t < 20; ++t) {
            CHECK(BitState::dominates(a, b));
            a = step(g, a);
            b = step(g, b);
        }
    }
}

TEST_CASE("find_orbit fixed points and pure rotations") {
    const Digraph g = testing::fig2_graph();
    const auto ones = find_orbit(g, BitState(g.vertex_count(), true));
    CHECK(ones.transient == 0);
    CHECK(ones.orbit.period() == 1);

    const Digraph six(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const auto rot = find_orbit(six, BitState::from_string("100000"));
    CHECK(rot.transient == 0);
    CHECK(rot.orbit.period() == 6);
}

TEST_CASE("orbit periods on the running example divide 6") {
    const Digraph g = testing::fig2_graph();
    std::mt19937_64 rng(27);
    for (int k = 0; k < 50; ++k) {
        BitState x(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) x.set(i, (rng() & 1u) != 0);
        const auto hit = find_orbit(g, x);
        CHECK(6 % hit.orbit.period() == 0);
    }
}

TEST_CASE("find_orbit agrees with a hash-the-trail oracle") {
    std::mt19937_64 rng(28);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const Digraph g = testing::random_digraph(rng, n, 2 * n);
        const std::uint64_t x0 = rng() & ((std::uint64_t{1} << n) - 1);
        const auto hit = find_orbit(g, testing::word_state(g, x0));
        const auto oracle = testing::brute_orbit_word(g, x0);
        CHECK(hit.transient == oracle.transient);
        CHECK(hit.orbit.period() == static_cast<int>(oracle.cycle.size()));

        // Same cycle as a set of states, and the entry really is x(transient).
        std::set<std::uint64_t> expected(oracle.cycle.begin(), oracle.cycle.end());
        std::set<std::uint64_t> got;
        for (const auto& s : hit.orbit.states) got.insert(s.low_word());
        CHECK(got == expected);
        CHECK(hit.orbit.states[static_cast<std::size_t>(hit.entry_index)].low_word() == oracle.cycle.front());

        // Orbit closes: stepping period times returns to the same state.
        for (const auto& s : hit.orbit.states)
            CHECK(simulate(g, s, static_cast<std::uint64_t>(hit.orbit.period())) == s);
        // Transient minimality: one step earlier is outside the orbit.
        if (hit.transient > 0) {
            const BitState before = simulate(g, testing::word_state(g, x0), hit.transient - 1);
            CHECK(hit.orbit.index_of(before) == -1);
        }
    }
}

TEST_CASE("orbit canonical form is rotation invariant") {
    std::mt19937_64 rng(29);
    const Digraph six(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const auto a = find_orbit(six, BitState::from_string("110100"));
    // Any state of the orbit leads to the identical canonical object.
    for (const auto& s : a.orbit.states) {
        const auto b = find_orbit(six, s);
        CHECK(b.orbit == a.orbit);
        CHECK(b.transient == 0);
    }
    (void)rng;
}

TEST_CASE("class saturation ANDs within classes") {
    const Digraph g(2, {{0, 1}, {1, 0}});
    const auto scd = scc_decompose(g);
    const auto cp = class_partition(g, scd);
    // Loop number 2: both classes singletons, saturation is the identity.
    CHECK(class_saturate(BitState::from_string("10"), cp) == BitState::from_string("10"));

    const Digraph shared = testing::thick_cycle({2, 1});
    const auto cp2 = class_partition(shared, scc_decompose(shared));
    CHECK(class_saturate(BitState::from_string("101"), cp2) == BitState::from_string("001"));

    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 40; ++trial) {
        const Digraph g3 = testing::random_strongly_connected(rng, 3 + static_cast<int>(rng() % 8),
                                                              static_cast<int>(rng() % 5));
        const auto cp3 = class_partition(g3, scc_decompose(g3));
        BitState x(g3.vertex_count());
        for (int i = 0; i < g3.vertex_count(); ++i) x.set(i, (rng() & 1u) != 0);
        const BitState once = class_saturate(x, cp3);
        CHECK(BitState::dominates(x, once));
        CHECK(class_saturate(once, cp3) == once); // idempotent
    }
}

TEST_CASE("strongly connected systems reach the saturated pattern at a p-aligned time") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Digraph g = testing::random_strongly_connected(rng, n, static_cast<int>(rng() % n));
        const auto cp = class_partition(g, scc_decompose(g));
        const int p = cp.loop_numbers[0];
        if (p == 0) continue;
        const std::uint64_t x0 = rng() & ((std::uint64_t{1} << n) - 1);
        const BitState target = class_saturate(testing::word_state(g, x0), cp);

        const auto hit = find_orbit(g, testing::word_state(g, x0));
        const std::uint64_t horizon = hit.transient + 2 * static_cast<std::uint64_t>(hit.orbit.period()) +
                                      static_cast<std::uint64_t>(p) + 1;
        bool found = false;
        BitState x = testing::word_state(g, x0);
        for (std::uint64_t t = 0; t <= horizon && !found; ++t) {
            if (t % static_cast<std::uint64_t>(p) == 0 && x == target) found = true;
            x = step(g, x);
        }
        CHECK(found);
    }
}
