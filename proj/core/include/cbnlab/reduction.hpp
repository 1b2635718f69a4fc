#ifndef CBNLAB_REDUCTION_HPP
#define CBNLAB_REDUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cbnlab/bitstate.hpp"
#include "cbnlab/digraph.hpp"
#include "cbnlab/dynamics.hpp"
#include "cbnlab/scc.hpp"

namespace cbnlab {

/// The reduced system of a trimmed, weakly connected CBN: one H-vertex per
/// walk-residue class of G, every positive-loop component collapsed to a
/// directed cycle of its loop number, zero-loop components kept as single
/// vertices, and cross edges inherited class-wise. H-vertex ids run in
/// component order, then class order j = 0..p_i-1, so u = hvertex[i][j].
struct ReducedSystem {
    Digraph g; // the original (trimmed) graph
    Digraph h;
    SccDecomposition scd; // of g
    ClassPartition cp;    // of g

    std::vector<std::vector<int>> hvertex; // [component][class j] -> H vertex id
    std::vector<int> h_comp;               // H vertex -> component index
    std::vector<int> h_class;              // H vertex -> class index j

    int component_count() const { return static_cast<int>(hvertex.size()); }
    int loop_number_of(int comp) const { return cp.loop_numbers[static_cast<std::size_t>(comp)]; }
    /// G-vertices of the class an H-vertex stands for.
    const std::vector<int>& class_of(int h_vertex) const {
        return cp.classes[static_cast<std::size_t>(h_comp[static_cast<std::size_t>(h_vertex)])]
                         [static_cast<std::size_t>(h_class[static_cast<std::size_t>(h_vertex)])];
    }
    /// lcm of the positive loop numbers (the bound N_G on orbit periods).
    std::uint64_t positive_lcm() const;
};

/// Builds the reduced system. Throws if some vertex of g has no
/// in-neighbor (trim first) or if g is not weakly connected.
ReducedSystem build_reduced(const Digraph& g);

/// H-state induced by a G-state: each H-bit is the AND over its class.
BitState induce_state(const ReducedSystem& rs, const BitState& x);

/// G-state obtained by broadcasting each H-bit across its class.
BitState lift_state(const ReducedSystem& rs, const BitState& y);

/// Simulates G from x0 and H from the induced state side by side, past
/// both transients, and checks over a two-N_G window that (a) every class
/// of G is constant and equal to its H-bit and (b) every positive-loop
/// cycle of H rotates one position per step.
struct Theorem1Report {
    std::uint64_t settle_time = 0; // N: max of the two observed transients
    std::uint64_t g_transient = 0;
    std::uint64_t h_transient = 0;
    int g_period = 0;
    int h_period = 0;
    bool class_constancy_ok = false; // clause (a)
    bool rotation_ok = false;        // clause (b)
    std::string failure_detail;      // empty when both clauses hold

    bool passed() const { return class_constancy_ok && rotation_ok; }
};

Theorem1Report verify_theorem1(const Digraph& g, const BitState& x0);

} // namespace cbnlab

#endif
