#include "cbnlab/necklace.hpp"

#include <algorithm>
#include <stdexcept>

#include "cbnlab/rotation.hpp"

namespace cbnlab {

Necklace canonicalize(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("canonicalize: empty string");
    std::string word(bits);
    for (const char c : word)
        if (c != '0' && c != '1') throw std::invalid_argument("canonicalize: expected only '0'/'1'");
    const std::size_t start = least_rotation_index(word);
    std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
    return Necklace{static_cast<int>(word.size()), std::move(word)};
}

std::vector<Necklace> enumerate_necklaces(int p) {
    if (p < 1) throw std::invalid_argument("enumerate_necklaces: length must be >= 1");
    if (p > 30) throw std::invalid_argument("enumerate_necklaces: length too large for dense enumeration");
    std::vector<Necklace> out;
    std::string word(static_cast<std::size_t>(p), '0');
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
        for (int i = 0; i < p; ++i)
            word[static_cast<std::size_t>(i)] = ((bits >> i) & 1u) ? '1' : '0';
        Necklace n = canonicalize(word);
        if (n.word == word) out.push_back(std::move(n)); // keep canonical representatives only
    }
    std::sort(out.begin(), out.end());
    return out;
}

int necklace_order(const Necklace& s) {
    const int p = s.length;
    for (int d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool periodic = true;
        for (int i = 0; i + d < p && periodic; ++i)
            periodic = s.word[static_cast<std::size_t>(i)] == s.word[static_cast<std::size_t>(i + d)];
        if (periodic) return d;
    }
    return p;
}

std::uint64_t necklace_count(int p) {
    if (p < 1) throw std::invalid_argument("necklace_count: length must be >= 1");
    auto phi = [](int m) {
        int result = m;
        for (int q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                while (m % q == 0) m /= q;
                result -= result / q;
            }
        }
        if (m > 1) result -= result / m;
        return result;
    };
    std::uint64_t total = 0;
    for (int d = 1; d <= p; ++d)
        if (p % d == 0) total += static_cast<std::uint64_t>(phi(d)) << (p / d);
    return total / static_cast<std::uint64_t>(p);
}

PeriodicOrbit orbit_from_necklace(const Digraph& g, const ClassPartition& cp, const Necklace& s) {
    if (cp.classes.size() != 1)
        throw std::invalid_argument("orbit_from_necklace: graph must be strongly connected");
    const int p = cp.loop_numbers.front();
    if (p <= 0) throw std::invalid_argument("orbit_from_necklace: loop number must be positive");
    if (s.length != p) throw std::invalid_argument("orbit_from_necklace: necklace length must equal the loop number");

    BitState x(g.vertex_count());
    for (int j = 0; j < p; ++j) {
        const bool bit = s.word[static_cast<std::size_t>(j)] == '1';
        for (const int v : cp.classes.front()[static_cast<std::size_t>(j)]) x.set(v, bit);
    }
    const int q = necklace_order(s);
    const CbnEngine engine(g);
    std::vector<BitState> cycle;
    cycle.reserve(static_cast<std::size_t>(q));
    BitState cur = x;
    for (int t = 0; t < q; ++t) {
        cycle.push_back(cur);
        cur = engine.step(cur);
    }
    return canonical_orbit(std::move(cycle));
}

Necklace necklace_from_orbit(const Digraph& g, const ClassPartition& cp, const PeriodicOrbit& o) {
    if (cp.classes.size() != 1)
        throw std::invalid_argument("necklace_from_orbit: graph must be strongly connected");
    const int p = cp.loop_numbers.front();
    if (p <= 0) throw std::invalid_argument("necklace_from_orbit: loop number must be positive");
    if (o.states.empty()) throw std::invalid_argument("necklace_from_orbit: empty orbit");
    const BitState& x = o.states.front();
    if (x.width() != g.vertex_count()) throw std::invalid_argument("necklace_from_orbit: width mismatch");

    std::string word(static_cast<std::size_t>(p), '0');
    for (int j = 0; j < p; ++j) {
        const auto& cls = cp.classes.front()[static_cast<std::size_t>(j)];
        const bool bit = x.get(cls.front());
        for (const int v : cls)
            if (x.get(v) != bit)
                throw std::invalid_argument("necklace_from_orbit: class not constant; state is not in an orbit");
        word[static_cast<std::size_t>(j)] = bit ? '1' : '0';
    }
    return canonicalize(word);
}

} // namespace cbnlab
