#include "cbnlab/reduction.hpp"

#include <numeric>
#include <stdexcept>

namespace cbnlab {

std::uint64_t ReducedSystem::positive_lcm() const {
    std::uint64_t acc = 1;
    for (const int p : cp.loop_numbers)
        if (p > 0) acc = std::lcm(acc, static_cast<std::uint64_t>(p));
    return acc;
}

ReducedSystem build_reduced(const Digraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) == 0)
            throw std::invalid_argument("build_reduced: vertex without in-neighbor; trim the graph first");
    if (g.vertex_count() == 0) throw std::invalid_argument("build_reduced: empty graph");
    if (!is_weakly_connected(g))
        throw std::invalid_argument("build_reduced: graph is not weakly connected; split it first");

    ReducedSystem rs;
    rs.g = g;
    rs.scd = scc_decompose(g);
    rs.cp = class_partition(g, rs.scd);

    int next_id = 0;
    rs.hvertex.resize(rs.cp.classes.size());
    for (std::size_t i = 0; i < rs.cp.classes.size(); ++i) {
        for (std::size_t j = 0; j < rs.cp.classes[i].size(); ++j) {
            rs.hvertex[i].push_back(next_id++);
            rs.h_comp.push_back(static_cast<int>(i));
            rs.h_class.push_back(static_cast<int>(j));
        }
    }

    std::vector<std::pair<int, int>> h_edges;
    // Cycle edges u_{i_j} -> u_{i_{(j+1) mod p_i}} for positive loop numbers.
    for (std::size_t i = 0; i < rs.hvertex.size(); ++i) {
        const int p = rs.cp.loop_numbers[i];
        for (int j = 0; j < p; ++j)
            h_edges.emplace_back(rs.hvertex[i][static_cast<std::size_t>(j)],
                                 rs.hvertex[i][static_cast<std::size_t>((j + 1) % p)]);
    }
    // Cross edges, inherited class-wise.
    for (const auto& [u, v] : g.edges()) {
        const int cu = rs.scd.comp_of[static_cast<std::size_t>(u)];
        const int cv = rs.scd.comp_of[static_cast<std::size_t>(v)];
        if (cu == cv) continue;
        h_edges.emplace_back(rs.hvertex[static_cast<std::size_t>(cu)]
                                       [static_cast<std::size_t>(rs.cp.class_of[static_cast<std::size_t>(u)])],
                             rs.hvertex[static_cast<std::size_t>(cv)]
                                       [static_cast<std::size_t>(rs.cp.class_of[static_cast<std::size_t>(v)])]);
    }
    rs.h = Digraph(next_id, std::move(h_edges));
    return rs;
}

BitState induce_state(const ReducedSystem& rs, const BitState& x) {
    if (x.width() != rs.g.vertex_count()) throw std::invalid_argument("induce_state: width mismatch");
    BitState y(rs.h.vertex_count());
    for (int u = 0; u < rs.h.vertex_count(); ++u) {
        bool bit = true;
        for (const int v : rs.class_of(u)) {
            if (!x.get(v)) {
                bit = false;
                break;
            }
        }
        y.set(u, bit);
    }
    return y;
}

BitState lift_state(const ReducedSystem& rs, const BitState& y) {
    if (y.width() != rs.h.vertex_count()) throw std::invalid_argument("lift_state: width mismatch");
    BitState x(rs.g.vertex_count());
    for (int u = 0; u < rs.h.vertex_count(); ++u) {
        if (!y.get(u)) continue;
        for (const int v : rs.class_of(u)) x.set(v, true);
    }
    return x;
}

Theorem1Report verify_theorem1(const Digraph& g, const BitState& x0) {
    const ReducedSystem rs = build_reduced(g);
    const BitState y0 = induce_state(rs, x0);

    Theorem1Report report;
    const OrbitHit gh = find_orbit(g, x0);
    const OrbitHit hh = find_orbit(rs.h, y0);
    report.g_transient = gh.transient;
    report.h_transient = hh.transient;
    report.g_period = gh.orbit.period();
    report.h_period = hh.orbit.period();
    report.settle_time = std::max(gh.transient, hh.transient);

    const std::uint64_t window = 2 * rs.positive_lcm();
    const std::uint64_t horizon = report.settle_time + window + 1;

    const CbnEngine ge(g);
    const CbnEngine he(rs.h);
    BitState x = x0;
    BitState y = y0;
    for (std::uint64_t t = 0; t < report.settle_time; ++t) {
        x = ge.step(x);
        y = he.step(y);
    }

    report.class_constancy_ok = true;
    report.rotation_ok = true;
    for (std::uint64_t t = report.settle_time; t <= horizon && report.passed(); ++t) {
        // Clause (a): every class of G constant and equal to its H-bit.
        for (int u = 0; u < rs.h.vertex_count() && report.class_constancy_ok; ++u) {
            const bool bit = y.get(u);
            for (const int v : rs.class_of(u)) {
                if (x.get(v) != bit) {
                    report.class_constancy_ok = false;
                    report.failure_detail = "class of H-vertex " + std::to_string(u) +
                                            " differs from its H-bit at t=" + std::to_string(t);
                    break;
                }
            }
        }
        const BitState y_next = he.step(y);
        // Clause (b): positive cycles of H rotate one position per step.
        if (t < horizon) {
            for (std::size_t i = 0; i < rs.hvertex.size() && report.rotation_ok; ++i) {
                const int p = rs.cp.loop_numbers[i];
                if (p <= 0) continue;
                for (int j = 0; j < p; ++j) {
                    const bool expected = y.get(rs.hvertex[i][static_cast<std::size_t>((j - 1 + p) % p)]);
                    if (y_next.get(rs.hvertex[i][static_cast<std::size_t>(j)]) != expected) {
                        report.rotation_ok = false;
                        report.failure_detail = "cycle " + std::to_string(i) +
                                                " failed to rotate at t=" + std::to_string(t);
                        break;
                    }
                }
            }
        }
        x = ge.step(x);
        y = y_next;
    }
    return report;
}

} // namespace cbnlab
