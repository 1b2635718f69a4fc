#include <doctest.h>

#include <random>

#include "cbnlab/bitstate.hpp"
#include "cbnlab/rotation.hpp"
#include "oracles.hpp"

using namespace cbnlab;

TEST_CASE("bitstate round-trips through strings") {
    const BitState s = BitState::from_string("100101");
    CHECK(s.width() == 6);
    CHECK(s.get(0));
    CHECK(!s.get(1));
    CHECK(s.to_string() == "100101");
    CHECK_THROWS_AS(BitState::from_string("10x"), std::invalid_argument);
}

TEST_CASE("bitstate word path agrees with bit path across word boundaries") {
    std::mt19937_64 rng(7);
    for (int n : {1, 63, 64, 65, 130}) {
        BitState s(n);
        for (int i = 0; i < n; ++i) s.set(i, (rng() & 1u) != 0);
        const BitState back = BitState::from_string(s.to_string());
        CHECK(back == s);
        CHECK(back.popcount() == s.popcount());
    }
}

TEST_CASE("lex order matches string comparison") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 70);
        BitState a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a.set(i, (rng() & 1u) != 0);
            b.set(i, (rng() & 1u) != 0);
        }
        CHECK(a.lex_less(b) == (a.to_string() < b.to_string()));
    }
}

TEST_CASE("dominates is the entry-wise order") {
    const BitState a = BitState::from_string("1101");
    const BitState b = BitState::from_string("1001");
    CHECK(BitState::dominates(a, b));
    CHECK(!BitState::dominates(b, a));
    CHECK(BitState::dominates(a, a));
    CHECK_THROWS_AS(BitState::dominates(a, BitState(3)), std::invalid_argument);
}

TEST_CASE("all-ones and complement respect the width") {
    BitState s(65, true);
    CHECK(s.all_ones());
    CHECK(s.complement().all_zeros());
    s.set(64, false);
    CHECK(!s.all_ones());
    CHECK(s.complement().popcount() == 1);
}

TEST_CASE("least rotation equals the all-rotations minimum") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::string s(static_cast<std::size_t>(n), '0');
        for (auto& c : s) c = (rng() & 1u) ? '1' : '0';
        std::string rotated = s;
        const std::size_t k = least_rotation_index(s);
        std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(k), rotated.end());
        CHECK(rotated == testing::min_rotation_oracle(s));
    }
}
