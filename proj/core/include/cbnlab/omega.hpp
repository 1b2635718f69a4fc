#ifndef CBNLAB_OMEGA_HPP
#define CBNLAB_OMEGA_HPP

#include <cstdint>
#include <vector>

#include "cbnlab/bitstate.hpp"
#include "cbnlab/dynamics.hpp"
#include "cbnlab/reduction.hpp"

namespace cbnlab {

/// One feeding route into a positive-loop cycle of H: an upper cycle, a
/// lower cycle, and the connector from the upper to the lower one --
/// either a single edge or a path whose interior vertices all have loop
/// number zero. Vertices are relabeled per part so that the connector
/// leaves local vertex a_{p_- - 1} of the upper cycle and enters local
/// vertex b_0 of the lower one; the offsets record where those sit in the
/// cycles' class order.
struct ElementaryPart {
    int minus_comp = 0;
    int plus_comp = 0;
    std::vector<int> connector; // H vertices: exit, interior..., entry
    int minus_offset = 0;       // class index of connector.front() in the upper cycle
    int plus_offset = 0;        // class index of connector.back() in the lower cycle

    int interior_length() const { return static_cast<int>(connector.size()) - 2; }
};

/// All feeding routes into positive-loop cycle `plus_comp` from
/// positive-loop cycles of strictly smaller level, one per distinct
/// connector path. Throws if the cycle has no positive-loop predecessor
/// (level 0) or is not a positive-loop cycle.
std::vector<ElementaryPart> elementary_parts(const ReducedSystem& rs, int plus_comp);

/// Lower-cycle steady state of a two-cycle system joined by one edge, in
/// the part-local labeling: each bit keeps its own value ANDed with the
/// upper-cycle bits sampled every p_+ steps back along the rotation,
/// lcm(p_-, p_+)/p_+ samples in total. The upper cycle itself is left
/// unchanged by the dynamics, so no map is needed for it.
BitState omega_plus(int p_minus, int p_plus, const BitState& x_minus, const BitState& x_plus);

/// Same, with a connector path of m >= 1 zero-loop interior vertices.
/// `path` is the steady state of the interior (position i carries the
/// upper-cycle bit i mod p_-); `plus` folds in both the interior's initial
/// bits and the upper-cycle samples that lie beyond them.
struct OmegaPathResult {
    BitState path;
    BitState plus;
};
OmegaPathResult omega_path(int p_minus, int interior, int p_plus, const BitState& x_minus,
                           const BitState& x_path, const BitState& x_plus);

/// Entry-wise AND of equal-width bit vectors.
BitState hadamard(const BitState& a, const BitState& b);

/// Steady state of every positive-loop cycle, indexed in class order.
struct OmegaResult {
    std::vector<int> components; // positive-loop component indices, ascending
    std::vector<BitState> values;

    const BitState& value_for(int comp) const;
};

/// Evaluates the steady map level by level: level-0 cycles keep their
/// bits, deeper cycles fold one omega contribution per elementary part
/// with the Hadamard product.
OmegaResult omega_global(const ReducedSystem& rs, const BitState& y);

/// Level index of every positive-loop component when zero-loop components
/// are skipped; -1 for zero-loop components themselves.
struct PositiveLevels {
    std::vector<int> level;
    int max_level = 0; // L
};
PositiveLevels positive_levels(const ReducedSystem& rs);

/// Largest number of zero-loop H-vertices on any directed path of H.
int zero_loop_depth(const ReducedSystem& rs);

/// Upper bound on the transient of H: 2^(L-1) * N_H for L >= 1 levels of
/// positive-loop cycles (N_H for a single level), plus the zero-loop path
/// depth where the reduced graph has zero-loop vertices.
std::uint64_t transition_bound(const ReducedSystem& rs);

struct Prediction {
    PeriodicOrbit orbit;
    BitState entry;               // a state of the orbit: the trajectory hits it
    std::uint64_t aligned_time;   // ...at every multiple of this once past the transient
    int entry_index = 0;          // position of entry inside the canonical orbit
};

/// End-to-end orbit prediction for a trimmed, weakly connected CBN:
/// reduce, induce, evaluate the steady map, fill zero-loop vertices by
/// phase-correct back-propagation, lift, and walk one period. Runtime is
/// governed by the reduced system, not by the transient of g.
Prediction predict_orbit(const Digraph& g, const BitState& x0);

/// Same, over a reduced system built once and reused across states.
Prediction predict_orbit(const ReducedSystem& rs, const BitState& x0);

/// Full H-state on the orbit that matches an omega evaluation: cycle
/// vertices carry their steady bits, zero-loop vertices the values forced
/// by the cycles' rotation history.
BitState steady_state_from_omega(const ReducedSystem& rs, const OmegaResult& om);

} // namespace cbnlab

#endif
