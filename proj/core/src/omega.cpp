#include "cbnlab/omega.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cbnlab {

namespace {

int floor_mod(long long a, int m) {
    const long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

BitState hadamard(const BitState& a, const BitState& b) {
    if (a.width() != b.width()) throw std::invalid_argument("hadamard: width mismatch");
    return BitState::bitwise_and(a, b);
}

BitState omega_plus(int p_minus, int p_plus, const BitState& x_minus, const BitState& x_plus) {
    if (p_minus < 1 || p_plus < 1) throw std::invalid_argument("omega_plus: cycle lengths must be positive");
    if (x_minus.width() != p_minus || x_plus.width() != p_plus)
        throw std::invalid_argument("omega_plus: width mismatch");
    const long long reps = std::lcm<long long>(p_minus, p_plus) / p_plus;
    BitState out(p_plus);
    for (int i = 0; i < p_plus; ++i) {
        bool bit = x_plus.get(i);
        for (long long j = 1; bit && j <= reps; ++j)
            bit = x_minus.get(floor_mod(i - j * p_plus, p_minus));
        out.set(i, bit);
    }
    return out;
}

OmegaPathResult omega_path(int p_minus, int interior, int p_plus, const BitState& x_minus,
                           const BitState& x_path, const BitState& x_plus) {
    if (p_minus < 1 || p_plus < 1) throw std::invalid_argument("omega_path: cycle lengths must be positive");
    if (interior < 1) throw std::invalid_argument("omega_path: interior length must be >= 1");
    if (x_minus.width() != p_minus || x_path.width() != interior || x_plus.width() != p_plus)
        throw std::invalid_argument("omega_path: width mismatch");

    OmegaPathResult result{BitState(interior), BitState(p_plus)};
    for (int i = 0; i < interior; ++i) result.path.set(i, x_minus.get(i % p_minus));

    const long long reps = std::lcm<long long>(p_minus, p_plus) / p_plus;
    for (int i = 0; i < p_plus; ++i) {
        bool bit = x_plus.get(i);
        const long long boundary = (i + interior) / p_plus; // samples that still land on the path
        for (long long j = 1; bit && j <= boundary; ++j)
            bit = x_path.get(floor_mod(i - j * p_plus, interior));
        // Beyond the path the samples land on the upper cycle, shifted by
        // the path length.
        for (long long j = boundary + 1; bit && j <= boundary + reps; ++j)
            bit = x_minus.get(floor_mod(i + interior - j * p_plus, p_minus));
        result.plus.set(i, bit);
    }
    return result;
}

PositiveLevels positive_levels(const ReducedSystem& rs) {
    const int q = rs.component_count();
    const auto out = rs.scd.condensation_out();
    std::vector<int> indeg(static_cast<std::size_t>(q), 0);
    for (const auto& [i, j] : rs.scd.condensation) ++indeg[static_cast<std::size_t>(j)];

    // Longest chain of positive-loop components strictly before each node.
    std::vector<int> chain(static_cast<std::size_t>(q), 0);
    std::vector<int> ready;
    for (int i = 0; i < q; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
    PositiveLevels pl;
    pl.level.assign(static_cast<std::size_t>(q), -1);
    while (!ready.empty()) {
        const int i = ready.back();
        ready.pop_back();
        const int weight = rs.loop_number_of(i) > 0 ? 1 : 0;
        if (weight) {
            pl.level[static_cast<std::size_t>(i)] = chain[static_cast<std::size_t>(i)];
            pl.max_level = std::max(pl.max_level, chain[static_cast<std::size_t>(i)]);
        }
        for (const int j : out[static_cast<std::size_t>(i)]) {
            chain[static_cast<std::size_t>(j)] =
                std::max(chain[static_cast<std::size_t>(j)], chain[static_cast<std::size_t>(i)] + weight);
            if (--indeg[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
        }
    }
    return pl;
}

int zero_loop_depth(const ReducedSystem& rs) {
    const int q = rs.component_count();
    const auto out = rs.scd.condensation_out();
    std::vector<int> indeg(static_cast<std::size_t>(q), 0);
    for (const auto& [i, j] : rs.scd.condensation) ++indeg[static_cast<std::size_t>(j)];

    std::vector<int> depth(static_cast<std::size_t>(q), 0);
    std::vector<int> ready;
    for (int i = 0; i < q; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
    int best = 0;
    while (!ready.empty()) {
        const int i = ready.back();
        ready.pop_back();
        if (rs.loop_number_of(i) == 0) ++depth[static_cast<std::size_t>(i)];
        best = std::max(best, depth[static_cast<std::size_t>(i)]);
        for (const int j : out[static_cast<std::size_t>(i)]) {
            depth[static_cast<std::size_t>(j)] =
                std::max(depth[static_cast<std::size_t>(j)], depth[static_cast<std::size_t>(i)]);
            if (--indeg[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
        }
    }
    return best;
}

std::vector<ElementaryPart> elementary_parts(const ReducedSystem& rs, int plus_comp) {
    if (plus_comp < 0 || plus_comp >= rs.component_count())
        throw std::invalid_argument("elementary_parts: no such component");
    if (rs.loop_number_of(plus_comp) <= 0)
        throw std::invalid_argument("elementary_parts: component is not a positive-loop cycle");

    std::vector<ElementaryPart> parts;
    // Backward walk from an entry vertex through zero-loop vertices only;
    // every positive-loop vertex reached closes one connector path.
    std::vector<int> reversed; // entry, interior..., exit (reverse of connector)
    auto extend = [&](auto&& self, int v) -> void {
        for (const int w : rs.h.in_neighbors(v)) {
            const int wc = rs.h_comp[static_cast<std::size_t>(w)];
            if (wc == plus_comp) continue; // the cycle's own rotation edge
            if (rs.loop_number_of(wc) > 0) {
                ElementaryPart part;
                part.minus_comp = wc;
                part.plus_comp = plus_comp;
                part.connector.assign(reversed.rbegin(), reversed.rend());
                part.connector.insert(part.connector.begin(), w);
                part.minus_offset = rs.h_class[static_cast<std::size_t>(w)];
                part.plus_offset = rs.h_class[static_cast<std::size_t>(part.connector.back())];
                parts.push_back(std::move(part));
            } else {
                reversed.push_back(w);
                self(self, w);
                reversed.pop_back();
            }
        }
    };
    const int p = rs.loop_number_of(plus_comp);
    for (int j = 0; j < p; ++j) {
        const int entry = rs.hvertex[static_cast<std::size_t>(plus_comp)][static_cast<std::size_t>(j)];
        reversed.assign(1, entry);
        extend(extend, entry);
    }
    if (parts.empty())
        throw std::invalid_argument("elementary_parts: cycle has no positive-loop predecessor");
    return parts;
}

const BitState& OmegaResult::value_for(int comp) const {
    const auto it = std::lower_bound(components.begin(), components.end(), comp);
    if (it == components.end() || *it != comp)
        throw std::invalid_argument("OmegaResult: no value for component");
    return values[static_cast<std::size_t>(it - components.begin())];
}

OmegaResult omega_global(const ReducedSystem& rs, const BitState& y) {
    if (y.width() != rs.h.vertex_count()) throw std::invalid_argument("omega_global: width mismatch");

    const PositiveLevels pl = positive_levels(rs);
    OmegaResult om;
    for (int i = 0; i < rs.component_count(); ++i)
        if (rs.loop_number_of(i) > 0) {
            om.components.push_back(i);
            om.values.emplace_back();
        }

    auto slot = [&](int comp) -> BitState& {
        const auto it = std::lower_bound(om.components.begin(), om.components.end(), comp);
        return om.values[static_cast<std::size_t>(it - om.components.begin())];
    };
    auto cycle_bits = [&](int comp) {
        const int p = rs.loop_number_of(comp);
        BitState bits(p);
        for (int j = 0; j < p; ++j)
            bits.set(j, y.get(rs.hvertex[static_cast<std::size_t>(comp)][static_cast<std::size_t>(j)]));
        return bits;
    };

    for (int level = 0; level <= pl.max_level; ++level) {
        for (const int comp : om.components) {
            if (pl.level[static_cast<std::size_t>(comp)] != level) continue;
            if (level == 0) {
                slot(comp) = cycle_bits(comp);
                continue;
            }
            const int p_plus = rs.loop_number_of(comp);
            BitState acc(p_plus, true);
            for (const ElementaryPart& part : elementary_parts(rs, comp)) {
                const int p_minus = rs.loop_number_of(part.minus_comp);
                const BitState& upper = slot(part.minus_comp);
                // Extract states in the part-local labeling.
                BitState x_minus(p_minus);
                for (int k = 0; k < p_minus; ++k)
                    x_minus.set(k, upper.get((part.minus_offset + 1 + k) % p_minus));
                BitState x_plus(p_plus);
                for (int k = 0; k < p_plus; ++k)
                    x_plus.set(k, y.get(rs.hvertex[static_cast<std::size_t>(comp)]
                                                  [static_cast<std::size_t>((part.plus_offset + k) % p_plus)]));
                const int m = part.interior_length();
                BitState local;
                if (m == 0) {
                    local = omega_plus(p_minus, p_plus, x_minus, x_plus);
                } else {
                    BitState x_path(m);
                    for (int t = 0; t < m; ++t)
                        x_path.set(t, y.get(part.connector[static_cast<std::size_t>(1 + t)]));
                    local = omega_path(p_minus, m, p_plus, x_minus, x_path, x_plus).plus;
                }
                BitState rotated(p_plus);
                for (int k = 0; k < p_plus; ++k)
                    rotated.set((part.plus_offset + k) % p_plus, local.get(k));
                acc = hadamard(acc, rotated);
            }
            slot(comp) = acc;
        }
    }
    return om;
}

std::uint64_t transition_bound(const ReducedSystem& rs) {
    const PositiveLevels pl = positive_levels(rs);
    const int shift = std::max(pl.max_level, 1) - 1;
    if (shift >= 63) throw std::overflow_error("transition_bound: level count too large");
    return (std::uint64_t{1} << shift) * rs.positive_lcm() +
           static_cast<std::uint64_t>(zero_loop_depth(rs));
}

BitState steady_state_from_omega(const ReducedSystem& rs, const OmegaResult& om) {
    BitState y(rs.h.vertex_count());
    for (std::size_t idx = 0; idx < om.components.size(); ++idx) {
        const int comp = om.components[idx];
        const int p = rs.loop_number_of(comp);
        for (int j = 0; j < p; ++j)
            y.set(rs.hvertex[static_cast<std::size_t>(comp)][static_cast<std::size_t>(j)],
                  om.values[idx].get(j));
    }

    // A zero-loop vertex at the aligned time holds the AND of its
    // in-neighbors one step earlier; cycles one step earlier are their
    // steady bits rotated back. Recursion depth is bounded by the
    // zero-loop path depth.
    std::map<std::pair<int, int>, bool> memo;
    auto value_at = [&](auto&& self, int u, int back) -> bool {
        const int comp = rs.h_comp[static_cast<std::size_t>(u)];
        const int p = rs.loop_number_of(comp);
        if (p > 0)
            return om.value_for(comp).get((rs.h_class[static_cast<std::size_t>(u)] + back) % p);
        const auto key = std::make_pair(u, back);
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        bool bit = true;
        for (const int w : rs.h.in_neighbors(u)) {
            if (!self(self, w, back + 1)) {
                bit = false;
                break;
            }
        }
        memo.emplace(key, bit);
        return bit;
    };
    for (int u = 0; u < rs.h.vertex_count(); ++u)
        if (rs.loop_number_of(rs.h_comp[static_cast<std::size_t>(u)]) == 0)
            y.set(u, value_at(value_at, u, 0));
    return y;
}

Prediction predict_orbit(const Digraph& g, const BitState& x0) {
    return predict_orbit(build_reduced(g), x0);
}

Prediction predict_orbit(const ReducedSystem& rs, const BitState& x0) {
    const Digraph& g = rs.g;
    const BitState y0 = induce_state(rs, x0);
    const OmegaResult om = omega_global(rs, y0);
    const BitState y_steady = steady_state_from_omega(rs, om);
    const BitState entry = lift_state(rs, y_steady);

    const std::uint64_t n_h = rs.positive_lcm();
    const std::uint64_t target = transition_bound(rs) + static_cast<std::uint64_t>(zero_loop_depth(rs));
    const std::uint64_t aligned = n_h * ((target + n_h - 1) / n_h);

    const CbnEngine engine(g);
    std::vector<BitState> cycle{entry};
    BitState cur = engine.step(entry);
    const std::uint64_t limit = n_h;
    while (cur != entry) {
        cycle.push_back(cur);
        cur = engine.step(cur);
        if (cycle.size() > limit)
            throw std::logic_error("predict_orbit: predicted state failed to close an orbit");
    }

    Prediction pred;
    pred.entry = entry;
    pred.aligned_time = aligned;
    pred.orbit = canonical_orbit(std::move(cycle));
    pred.entry_index = pred.orbit.index_of(entry);
    return pred;
}

} // namespace cbnlab
