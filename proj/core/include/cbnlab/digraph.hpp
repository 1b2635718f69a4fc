#ifndef CBNLAB_DIGRAPH_HPP
#define CBNLAB_DIGRAPH_HPP

#include <utility>
#include <vector>

namespace cbnlab {

/// A directed graph on vertices 0..n-1. Self-arcs are allowed, duplicate
/// edges are collapsed at construction. Adjacency lists are kept sorted,
/// so every traversal in the library is deterministic.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    /// Sorted, deduplicated (u, v) pairs.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Subgraph induced by `vertices` (original ids). Local ids follow the
/// ascending order of the original ids; `to_original` maps them back.
Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices,
                         std::vector<int>* to_original = nullptr);

struct ComponentSplit {
    Digraph graph;
    std::vector<int> to_original; // local id -> original id
};

/// Splits into weakly connected components, ordered by smallest original
/// vertex id. An empty graph yields an empty list.
std::vector<ComponentSplit> weakly_connected_components(const Digraph& g);

bool is_weakly_connected(const Digraph& g);

} // namespace cbnlab

#endif
