#include "cbnlab/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbnlab {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Digraph: edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    out_.assign(static_cast<std::size_t>(n), {});
    in_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges_) {
        out_[static_cast<std::size_t>(u)].push_back(v);
        in_[static_cast<std::size_t>(v)].push_back(u);
    }
    // out_ lists are already sorted because edges_ is; in_ lists need it.
    for (auto& lst : in_) std::sort(lst.begin(), lst.end());
}

bool Digraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& lst = out_[static_cast<std::size_t>(u)];
    return std::binary_search(lst.begin(), lst.end(), v);
}

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices,
                         std::vector<int>* to_original) {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const int v = verts[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        local[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }

    std::vector<std::pair<int, int>> edges;
    for (const int u : verts) {
        for (const int v : g.out_neighbors(u)) {
            if (local[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(local[static_cast<std::size_t>(u)],
                                   local[static_cast<std::size_t>(v)]);
        }
    }
    if (to_original) *to_original = verts;
    return Digraph(static_cast<int>(verts.size()), std::move(edges));
}

std::vector<ComponentSplit> weakly_connected_components(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto* lst : {&g.out_neighbors(u), &g.in_neighbors(u)}) {
                for (const int v : *lst) {
                    if (comp[static_cast<std::size_t>(v)] < 0) {
                        comp[static_cast<std::size_t>(v)] = count;
                        stack.push_back(v);
                    }
                }
            }
        }
        ++count;
    }

    std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
    for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<ComponentSplit> out;
    out.reserve(static_cast<std::size_t>(count));
    for (auto& verts : members) {
        ComponentSplit split;
        split.graph = induced_subgraph(g, verts, &split.to_original);
        out.push_back(std::move(split));
    }
    return out;
}

bool is_weakly_connected(const Digraph& g) {
    return weakly_connected_components(g).size() <= 1;
}

} // namespace cbnlab
