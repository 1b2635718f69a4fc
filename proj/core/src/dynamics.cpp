#include "cbnlab/dynamics.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "cbnlab/rotation.hpp"

namespace cbnlab {

TrimResult trim(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) indeg[static_cast<std::size_t>(v)] = g.in_degree(v);

    std::vector<int> round(static_cast<std::size_t>(n), 0); // 0 = kept
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) frontier.push_back(v);

    TrimResult result;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<int> next;
        for (const int v : frontier) round[static_cast<std::size_t>(v)] = depth;
        for (const int v : frontier) {
            for (const int w : g.out_neighbors(v)) {
                if (round[static_cast<std::size_t>(w)] != 0) continue;
                if (--indeg[static_cast<std::size_t>(w)] == 0) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    result.depth = depth;

    std::vector<int> kept;
    for (int v = 0; v < n; ++v) {
        if (round[static_cast<std::size_t>(v)] == 0)
            kept.push_back(v);
        else
            result.removed.push_back(v);
    }
    result.graph = induced_subgraph(g, kept, &result.kept);
    return result;
}

CbnEngine::CbnEngine(const Digraph& g) : n_(g.vertex_count()) {
    if (n_ <= 64) {
        mask_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            for (const int u : g.in_neighbors(v))
                mask_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    } else {
        in_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) in_.push_back(g.in_neighbors(v));
    }
}

BitState CbnEngine::step(const BitState& x) const {
    if (x.width() != n_) throw std::invalid_argument("CbnEngine::step: width mismatch");
    if (single_word()) return BitState::from_word(n_, step_word(x.low_word()));
    BitState next(n_);
    for (int v = 0; v < n_; ++v) {
        bool value = true;
        for (const int u : in_[static_cast<std::size_t>(v)]) {
            if (!x.get(u)) {
                value = false;
                break;
            }
        }
        next.set(v, value);
    }
    return next;
}

BitState step(const Digraph& g, const BitState& x) {
    if (x.width() != g.vertex_count()) throw std::invalid_argument("step: width mismatch");
    BitState next(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool value = true;
        for (const int u : g.in_neighbors(v)) {
            if (!x.get(u)) {
                value = false;
                break;
            }
        }
        next.set(v, value);
    }
    return next;
}

BitState simulate(const Digraph& g, BitState x, std::uint64_t steps) {
    if (x.width() != g.vertex_count()) throw std::invalid_argument("simulate: width mismatch");
    const CbnEngine engine(g);
    if (engine.single_word()) {
        std::uint64_t w = x.low_word();
        for (std::uint64_t t = 0; t < steps; ++t) w = engine.step_word(w);
        return BitState::from_word(g.vertex_count(), w);
    }
    for (std::uint64_t t = 0; t < steps; ++t) x = engine.step(x);
    return x;
}

int PeriodicOrbit::index_of(const BitState& x) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == x) return static_cast<int>(i);
    return -1;
}

PeriodicOrbit canonical_orbit(std::vector<BitState> cycle) {
    if (cycle.empty()) throw std::invalid_argument("canonical_orbit: empty cycle");
    const std::size_t start = least_rotation_index(
        cycle, [](const BitState& a, const BitState& b) { return a.lex_less(b); });
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(start), cycle.end());
    return PeriodicOrbit{std::move(cycle)};
}

namespace {

template <class State, class Step, class Eq>
void brent(const State& x0, Step f, Eq eq, std::uint64_t& mu, std::uint64_t& lam) {
    // Phase 1: power-of-two search for the period.
    std::uint64_t power = 1;
    lam = 1;
    State tortoise = x0;
    State hare = f(x0);
    while (!eq(tortoise, hare)) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = f(hare);
        ++lam;
    }
    // Phase 2: advance a probe lam steps, then walk both until they meet.
    hare = x0;
    for (std::uint64_t i = 0; i < lam; ++i) hare = f(hare);
    mu = 0;
    tortoise = x0;
    while (!eq(tortoise, hare)) {
        tortoise = f(tortoise);
        hare = f(hare);
        ++mu;
    }
}

} // namespace

OrbitHit find_orbit(const Digraph& g, const BitState& x0) {
    if (x0.width() != g.vertex_count()) throw std::invalid_argument("find_orbit: width mismatch");
    const CbnEngine engine(g);

    OrbitHit hit;
    std::uint64_t mu = 0, lam = 0;
    std::vector<BitState> cycle;
    if (engine.single_word()) {
        const std::uint64_t w0 = x0.low_word();
        brent(
            w0, [&](std::uint64_t w) { return engine.step_word(w); },
            [](std::uint64_t a, std::uint64_t b) { return a == b; }, mu, lam);
        std::uint64_t w = w0;
        for (std::uint64_t i = 0; i < mu; ++i) w = engine.step_word(w);
        cycle.reserve(static_cast<std::size_t>(lam));
        for (std::uint64_t i = 0; i < lam; ++i) {
            cycle.push_back(BitState::from_word(g.vertex_count(), w));
            w = engine.step_word(w);
        }
    } else {
        brent(
            x0, [&](const BitState& s) { return engine.step(s); },
            [](const BitState& a, const BitState& b) { return a == b; }, mu, lam);
        BitState s = x0;
        for (std::uint64_t i = 0; i < mu; ++i) s = engine.step(s);
        cycle.reserve(static_cast<std::size_t>(lam));
        for (std::uint64_t i = 0; i < lam; ++i) {
            cycle.push_back(s);
            s = engine.step(s);
        }
    }
    const BitState first = cycle.front();
    hit.transient = mu;
    hit.orbit = canonical_orbit(std::move(cycle));
    hit.entry_index = hit.orbit.index_of(first);
    return hit;
}

BitState class_saturate(const BitState& x, const ClassPartition& cp) {
    BitState out = x;
    for (const auto& comp_classes : cp.classes) {
        for (const auto& cls : comp_classes) {
            bool value = true;
            for (const int v : cls) {
                if (v >= x.width()) throw std::invalid_argument("class_saturate: width mismatch");
                if (!x.get(v)) {
                    value = false;
                    break;
                }
            }
            if (!value)
                for (const int v : cls) out.set(v, false);
        }
    }
    return out;
}

} // namespace cbnlab
