#ifndef CBNLAB_SCC_HPP
#define CBNLAB_SCC_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "cbnlab/digraph.hpp"

namespace cbnlab {

/// Coarsest partition into strongly connected components, plus the acyclic
/// condensation and its longest-path levels. Component numbering is
/// deterministic: components are sorted by their smallest contained vertex.
struct SccDecomposition {
    std::vector<std::vector<int>> components; // sorted vertex lists
    std::vector<int> comp_of;                 // vertex -> component index
    std::vector<std::pair<int, int>> condensation; // sorted unique cross edges
    std::vector<int> level;                   // 0 if no predecessor, else 1 + max pred level
    int max_level = 0;

    int component_count() const { return static_cast<int>(components.size()); }
    /// Condensation adjacency (component -> successor components), sorted.
    std::vector<std::vector<int>> condensation_out() const;
    std::vector<std::vector<int>> condensation_in() const;
};

SccDecomposition scc_decompose(const Digraph& g);

/// gcd of all cycle lengths inside the strongly connected `component`;
/// 0 for a single vertex without a self-arc. Runs in O(|V_i|+|E_i|) by
/// folding d(u)+1-d(v) over internal edges, d being BFS distance from the
/// smallest vertex. Throws if `component` is not strongly connected in g.
int loop_number(const Digraph& g, const std::vector<int>& component);

struct CycleEnumeration {
    std::vector<std::vector<int>> cycles; // original vertex ids, smallest id first
    bool truncated = false;               // true when `cap` was reached
};

/// All simple cycles of the subgraph induced by the strongly connected
/// `component` (Johnson's algorithm), stopping at `cap` cycles.
CycleEnumeration enumerate_cycles(const Digraph& g, const std::vector<int>& component,
                                  std::size_t cap = 1000000);

/// Per-component loop numbers and the ordered walk-residue classes.
/// For p_i > 0 the classes are the BFS-distance-mod-p_i fibers anchored at
/// the component's smallest vertex (which sits in class 0); out-neighbors
/// of class j inside the component lie in class (j+1) mod p_i. For
/// p_i = 0 the single vertex forms the only class.
struct ClassPartition {
    std::vector<int> loop_numbers;                       // per component
    std::vector<std::vector<std::vector<int>>> classes;  // [comp][j] -> sorted vertices
    std::vector<int> class_of;                           // vertex -> class index j
};

ClassPartition class_partition(const Digraph& g, const SccDecomposition& scd);

} // namespace cbnlab

#endif
