#include "cbnlab/scc.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cbnlab {

namespace {

// Iterative Tarjan; emits components in reverse topological order.
std::vector<std::vector<int>> tarjan_components(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
                stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = true;
            }
            const auto& succ = g.out_neighbors(v);
            bool descended = false;
            while (child < succ.size()) {
                const int w = succ[child];
                ++child;
                if (index[static_cast<std::size_t>(w)] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                std::vector<int> comp;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp.push_back(w);
                    if (w == v) break;
                }
                comps.push_back(std::move(comp));
            }
            const int finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().v;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return comps;
}

} // namespace

std::vector<std::vector<int>> SccDecomposition::condensation_out() const {
    std::vector<std::vector<int>> adj(components.size());
    for (const auto& [i, j] : condensation) adj[static_cast<std::size_t>(i)].push_back(j);
    return adj;
}

std::vector<std::vector<int>> SccDecomposition::condensation_in() const {
    std::vector<std::vector<int>> adj(components.size());
    for (const auto& [i, j] : condensation) adj[static_cast<std::size_t>(j)].push_back(i);
    return adj;
}

SccDecomposition scc_decompose(const Digraph& g) {
    SccDecomposition scd;
    auto comps = tarjan_components(g);
    for (auto& c : comps) std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    scd.components = std::move(comps);

    const int n = g.vertex_count();
    scd.comp_of.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < scd.component_count(); ++i)
        for (const int v : scd.components[static_cast<std::size_t>(i)])
            scd.comp_of[static_cast<std::size_t>(v)] = i;

    for (const auto& [u, v] : g.edges()) {
        const int cu = scd.comp_of[static_cast<std::size_t>(u)];
        const int cv = scd.comp_of[static_cast<std::size_t>(v)];
        if (cu != cv) scd.condensation.emplace_back(cu, cv);
    }
    std::sort(scd.condensation.begin(), scd.condensation.end());
    scd.condensation.erase(std::unique(scd.condensation.begin(), scd.condensation.end()),
                           scd.condensation.end());

    // Longest-path layering of the condensation: maximal components sit at
    // level 0, every other component one past its deepest predecessor.
    const int q = scd.component_count();
    std::vector<int> indeg(static_cast<std::size_t>(q), 0);
    auto out = scd.condensation_out();
    for (const auto& [i, j] : scd.condensation) ++indeg[static_cast<std::size_t>(j)];
    scd.level.assign(static_cast<std::size_t>(q), 0);
    std::queue<int> ready;
    for (int i = 0; i < q; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) ready.push(i);
    int seen = 0;
    while (!ready.empty()) {
        const int i = ready.front();
        ready.pop();
        ++seen;
        scd.max_level = std::max(scd.max_level, scd.level[static_cast<std::size_t>(i)]);
        for (const int j : out[static_cast<std::size_t>(i)]) {
            scd.level[static_cast<std::size_t>(j)] =
                std::max(scd.level[static_cast<std::size_t>(j)], scd.level[static_cast<std::size_t>(i)] + 1);
            if (--indeg[static_cast<std::size_t>(j)] == 0) ready.push(j);
        }
    }
    if (seen != q) throw std::logic_error("scc_decompose: condensation is not acyclic");
    return scd;
}

namespace {

std::vector<int> bfs_distances(const Digraph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (const int v : g.out_neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

bool is_strongly_connected(const Digraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    const auto fwd = bfs_distances(g, 0);
    if (std::find(fwd.begin(), fwd.end(), -1) != fwd.end()) return false;
    // Backward reachability via the reversed adjacency.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const int v : g.in_neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

} // namespace

int loop_number(const Digraph& g, const std::vector<int>& component) {
    const Digraph sub = induced_subgraph(g, component, nullptr);
    if (!is_strongly_connected(sub))
        throw std::invalid_argument("loop_number: vertex set is not strongly connected");
    if (sub.vertex_count() == 0) throw std::invalid_argument("loop_number: empty component");

    const auto dist = bfs_distances(sub, 0);
    long long p = 0;
    for (const auto& [u, v] : sub.edges()) {
        const long long diff = dist[static_cast<std::size_t>(u)] + 1 - dist[static_cast<std::size_t>(v)];
        p = std::gcd(p, diff < 0 ? -diff : diff);
    }
    return static_cast<int>(p);
}

namespace {

// Johnson's circuit search, restricted to the strong component of the root
// inside the subgraph of vertices >= root. Cycles found here all have the
// root as their smallest vertex, so the outer loop never repeats a cycle.
struct JohnsonState {
    const std::vector<std::vector<int>>* adj = nullptr;
    int root = 0;
    std::size_t cap = 0;
    std::vector<bool> blocked;
    std::vector<std::vector<int>> block_map;
    std::vector<int> path;
    std::vector<std::vector<int>>* out = nullptr;
    bool truncated = false;

    void unblock(int v) {
        blocked[static_cast<std::size_t>(v)] = false;
        for (const int w : block_map[static_cast<std::size_t>(v)])
            if (blocked[static_cast<std::size_t>(w)]) unblock(w);
        block_map[static_cast<std::size_t>(v)].clear();
    }

    bool circuit(int v) {
        bool found = false;
        path.push_back(v);
        blocked[static_cast<std::size_t>(v)] = true;
        for (const int w : (*adj)[static_cast<std::size_t>(v)]) {
            if (truncated) break;
            if (w == root) {
                if (out->size() >= cap) {
                    truncated = true;
                    break;
                }
                out->push_back(path);
                found = true;
            } else if (!blocked[static_cast<std::size_t>(w)]) {
                if (circuit(w)) found = true;
            }
        }
        if (found || truncated) {
            unblock(v);
        } else {
            for (const int w : (*adj)[static_cast<std::size_t>(v)]) {
                auto& lst = block_map[static_cast<std::size_t>(w)];
                if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
            }
        }
        path.pop_back();
        return found;
    }
};

} // namespace

CycleEnumeration enumerate_cycles(const Digraph& g, const std::vector<int>& component,
                                  std::size_t cap) {
    std::vector<int> to_original;
    const Digraph sub = induced_subgraph(g, component, &to_original);
    if (!is_strongly_connected(sub))
        throw std::invalid_argument("enumerate_cycles: vertex set is not strongly connected");

    const int k = sub.vertex_count();
    CycleEnumeration result;
    std::vector<std::vector<int>> local_cycles;

    for (int s = 0; s < k && !result.truncated; ++s) {
        // Strong component of s among vertices >= s.
        std::vector<int> high;
        for (int v = s; v < k; ++v) high.push_back(v);
        std::vector<int> high_orig;
        const Digraph high_sub = induced_subgraph(sub, high, &high_orig); // local ids shift by s
        const auto scd = scc_decompose(high_sub);
        const int cs = scd.comp_of[0]; // s maps to local 0
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
        bool has_any_edge = false;
        for (const int u_local : scd.components[static_cast<std::size_t>(cs)]) {
            for (const int v_local : high_sub.out_neighbors(u_local)) {
                if (scd.comp_of[static_cast<std::size_t>(v_local)] == cs) {
                    adj[static_cast<std::size_t>(u_local + s)].push_back(v_local + s);
                    has_any_edge = true;
                }
            }
        }
        if (!has_any_edge) continue;

        JohnsonState js;
        js.adj = &adj;
        js.root = s;
        js.cap = cap;
        js.blocked.assign(static_cast<std::size_t>(k), false);
        js.block_map.assign(static_cast<std::size_t>(k), {});
        js.out = &local_cycles;
        js.circuit(s);
        if (js.truncated) result.truncated = true;
    }

    result.cycles.reserve(local_cycles.size());
    for (const auto& cyc : local_cycles) {
        std::vector<int> orig;
        orig.reserve(cyc.size());
        for (const int v : cyc) orig.push_back(to_original[static_cast<std::size_t>(v)]);
        result.cycles.push_back(std::move(orig));
    }
    return result;
}

ClassPartition class_partition(const Digraph& g, const SccDecomposition& scd) {
    ClassPartition cp;
    cp.class_of.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& comp : scd.components) {
        const int p = loop_number(g, comp);
        cp.loop_numbers.push_back(p);
        if (p == 0) {
            cp.classes.push_back({comp});
            cp.class_of[static_cast<std::size_t>(comp.front())] = 0;
            continue;
        }
        std::vector<int> to_original;
        const Digraph sub = induced_subgraph(g, comp, &to_original);
        const auto dist = bfs_distances(sub, 0); // anchor = smallest vertex id
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(p));
        for (int v = 0; v < sub.vertex_count(); ++v) {
            const int j = dist[static_cast<std::size_t>(v)] % p;
            classes[static_cast<std::size_t>(j)].push_back(to_original[static_cast<std::size_t>(v)]);
            cp.class_of[static_cast<std::size_t>(to_original[static_cast<std::size_t>(v)])] = j;
        }
        for (auto& cls : classes) std::sort(cls.begin(), cls.end());
        cp.classes.push_back(std::move(classes));
    }
    return cp;
}

} // namespace cbnlab
