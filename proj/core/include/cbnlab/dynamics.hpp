#ifndef CBNLAB_DYNAMICS_HPP
#define CBNLAB_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "cbnlab/bitstate.hpp"
#include "cbnlab/digraph.hpp"
#include "cbnlab/scc.hpp"

namespace cbnlab {

struct TrimResult {
    Digraph graph;            // survivors, re-indexed densely
    std::vector<int> kept;    // new id -> original id (ascending)
    std::vector<int> removed; // original ids, ascending
    int depth = 0;            // cascade rounds; removed vertices hold 1 from this time on
};

/// Deletes vertices with no in-neighbor, cascading, until every surviving
/// vertex has one. A graph without cycles trims away completely.
TrimResult trim(const Digraph& g);

/// One synchronous update: each vertex becomes the AND of its in-neighbors
/// (a vertex without in-neighbors becomes 1). Throws on width mismatch.
BitState step(const Digraph& g, const BitState& x);

/// t-fold composition of step.
BitState simulate(const Digraph& g, BitState x, std::uint64_t steps);

/// A cyclic state sequence in canonical form: the rotation that is
/// lexicographically least under BitState::lex_less. States are pairwise
/// distinct and step maps each to the next.
struct PeriodicOrbit {
    std::vector<BitState> states;

    int period() const { return static_cast<int>(states.size()); }
    /// Position of `x` in the orbit, or -1.
    int index_of(const BitState& x) const;

    friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

/// Rotates a raw cycle of states into canonical form.
PeriodicOrbit canonical_orbit(std::vector<BitState> cycle);

struct OrbitHit {
    std::uint64_t transient = 0; // first time inside the orbit (minimal)
    PeriodicOrbit orbit;
    int entry_index = 0; // position of the state at `transient` inside orbit
};

/// Exact transient and minimal period via Brent's cycle detection on the
/// update map (O(1) extra memory, no state hashing).
OrbitHit find_orbit(const Digraph& g, const BitState& x0);

/// Per class, every bit becomes the AND over the class. Idempotent; the
/// result is entry-wise <= x.
BitState class_saturate(const BitState& x, const ClassPartition& cp);

/// Per-graph stepping context. Graphs of width <= 64 get a one-word mask
/// path; wider graphs fall back to adjacency walks over a word array.
class CbnEngine {
public:
    explicit CbnEngine(const Digraph& g);

    int width() const { return n_; }
    bool single_word() const { return n_ <= 64; }

    /// One update on a single-word state (width() <= 64 only).
    std::uint64_t step_word(std::uint64_t x) const {
        std::uint64_t next = 0;
        for (int i = 0; i < n_; ++i) {
            const std::uint64_t m = mask_[static_cast<std::size_t>(i)];
            next |= static_cast<std::uint64_t>((x & m) == m) << i;
        }
        return next;
    }

    BitState step(const BitState& x) const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> mask_;   // in-neighbor masks when n_ <= 64
    std::vector<std::vector<int>> in_;  // general fallback
};

} // namespace cbnlab

#endif
