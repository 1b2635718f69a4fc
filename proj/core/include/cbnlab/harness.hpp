#ifndef CBNLAB_HARNESS_HPP
#define CBNLAB_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cbnlab/bitstate.hpp"
#include "cbnlab/digraph.hpp"
#include "cbnlab/dynamics.hpp"
#include "cbnlab/omega.hpp"
#include "cbnlab/reduction.hpp"

namespace cbnlab {

/// Everything that depends on the graph but not on the initial state:
/// trimming, the split into weakly connected pieces, and one reduced
/// system per piece. Lets a batch of states share the structural work.
struct Pipeline {
    Digraph g;
    TrimResult trimmed;
    std::vector<ComponentSplit> components; // of trimmed.graph
    std::vector<ReducedSystem> reduced;     // parallel to components
    std::vector<std::uint64_t> bounds;      // transition_bound per component

    /// lcm of positive loop numbers across all components (period bound).
    std::uint64_t positive_lcm() const;
    /// Original-id state restricted to one component's local ids.
    BitState restrict_to(int component, const BitState& x) const;
};

Pipeline build_pipeline(const Digraph& g);

/// Orbit prediction for arbitrary digraphs: trims (trimmed-away vertices
/// hold 1 in every orbit), predicts each weakly connected piece, and
/// composes. Works where predict_orbit's preconditions don't hold.
Prediction predict_any(const Pipeline& pl, const BitState& x0);
Prediction predict_any(const Digraph& g, const BitState& x0);

/// Per-state verification verdict: closed-form prediction vs brute force,
/// the two settledness clauses, the period-divisibility corollary, and
/// the transient bound on every reduced system.
struct StateVerdict {
    BitState x0;
    std::uint64_t transient = 0; // brute force
    int period = 0;              // brute force
    bool orbit_match = false;    // predicted orbit == brute-force orbit
    bool entry_aligned = false;  // predicted entry seen at an aligned time past the transient
    bool class_constancy = false;
    bool rotation = false;
    bool corollary = false; // period divides the positive-loop lcm
    bool bound = false;     // reduced-system transient <= transition bound
    std::string detail;     // first failing clause, empty when ok

    bool ok() const {
        return orbit_match && entry_aligned && class_constancy && rotation && corollary && bound;
    }
};

StateVerdict verify_state(const Pipeline& pl, const BitState& x0);

struct VerifyReport {
    std::vector<StateVerdict> verdicts; // input order
    std::uint64_t period_lcm = 0;       // N_G of the trimmed graph
    int failures = 0;

    bool all_ok() const { return failures == 0; }
};

/// Fans the checks out over a worker pool; the report is assembled in
/// input order, so output is independent of the worker count.
VerifyReport verify_states(const Pipeline& pl, const std::vector<BitState>& states, int threads = 0);

/// CBN_LAB_THREADS when set (clamped to [1, 64]), hardware concurrency
/// otherwise.
int default_thread_count();

} // namespace cbnlab

#endif
