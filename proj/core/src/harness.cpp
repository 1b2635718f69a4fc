#include "cbnlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cbnlab {

std::uint64_t Pipeline::positive_lcm() const {
    std::uint64_t acc = 1;
    for (const auto& rs : reduced) acc = std::lcm(acc, rs.positive_lcm());
    return acc;
}

BitState Pipeline::restrict_to(int component, const BitState& x) const {
    const auto& split = components[static_cast<std::size_t>(component)];
    BitState local(split.graph.vertex_count());
    for (int i = 0; i < split.graph.vertex_count(); ++i) {
        const int trimmed_id = split.to_original[static_cast<std::size_t>(i)];
        local.set(i, x.get(trimmed.kept[static_cast<std::size_t>(trimmed_id)]));
    }
    return local;
}

Pipeline build_pipeline(const Digraph& g) {
    Pipeline pl;
    pl.g = g;
    pl.trimmed = trim(g);
    pl.components = weakly_connected_components(pl.trimmed.graph);
    pl.reduced.reserve(pl.components.size());
    for (const auto& split : pl.components) {
        pl.reduced.push_back(build_reduced(split.graph));
        pl.bounds.push_back(transition_bound(pl.reduced.back()));
    }
    return pl;
}

Prediction predict_any(const Pipeline& pl, const BitState& x0) {
    if (x0.width() != pl.g.vertex_count()) throw std::invalid_argument("predict_any: width mismatch");

    // Trimmed-away vertices hold 1 in every orbit.
    BitState entry(pl.g.vertex_count());
    for (const int v : pl.trimmed.removed) entry.set(v, true);

    std::uint64_t aligned = 1;
    for (std::size_t c = 0; c < pl.components.size(); ++c) {
        const Prediction local = predict_orbit(pl.reduced[c], pl.restrict_to(static_cast<int>(c), x0));
        aligned = std::lcm(aligned, local.aligned_time);
        const auto& split = pl.components[c];
        for (int i = 0; i < split.graph.vertex_count(); ++i) {
            const int orig = pl.trimmed.kept[static_cast<std::size_t>(
                split.to_original[static_cast<std::size_t>(i)])];
            entry.set(orig, local.entry.get(i));
        }
    }
    const auto depth = static_cast<std::uint64_t>(pl.trimmed.depth);
    if (depth > 0) aligned *= (depth + aligned - 1) / aligned;

    const CbnEngine engine(pl.g);
    std::vector<BitState> cycle{entry};
    BitState cur = engine.step(entry);
    const std::uint64_t limit = pl.positive_lcm();
    while (cur != entry) {
        cycle.push_back(cur);
        cur = engine.step(cur);
        if (cycle.size() > limit)
            throw std::logic_error("predict_any: predicted state failed to close an orbit");
    }

    Prediction pred;
    pred.entry = entry;
    pred.aligned_time = aligned;
    pred.orbit = canonical_orbit(std::move(cycle));
    pred.entry_index = pred.orbit.index_of(entry);
    return pred;
}

Prediction predict_any(const Digraph& g, const BitState& x0) {
    return predict_any(build_pipeline(g), x0);
}

StateVerdict verify_state(const Pipeline& pl, const BitState& x0) {
    StateVerdict v;
    v.x0 = x0;

    const Prediction pred = predict_any(pl, x0);
    const OrbitHit brute = find_orbit(pl.g, x0);
    v.transient = brute.transient;
    v.period = brute.orbit.period();

    v.orbit_match = pred.orbit == brute.orbit;
    if (!v.orbit_match) v.detail = "predicted orbit differs from brute force";

    // The trajectory must sit on the predicted entry state at every
    // aligned time once past the transient.
    const std::uint64_t l = std::max<std::uint64_t>(1, (v.transient + pred.aligned_time - 1) / pred.aligned_time);
    v.entry_aligned = simulate(pl.g, x0, l * pred.aligned_time) == pred.entry;
    if (!v.entry_aligned && v.detail.empty()) v.detail = "entry state missing at aligned time";

    v.class_constancy = true;
    v.rotation = true;
    for (std::size_t c = 0; c < pl.components.size(); ++c) {
        const auto report = verify_theorem1(pl.components[c].graph,
                                            pl.restrict_to(static_cast<int>(c), x0));
        v.class_constancy = v.class_constancy && report.class_constancy_ok;
        v.rotation = v.rotation && report.rotation_ok;
        if (!report.passed() && v.detail.empty()) v.detail = report.failure_detail;
    }

    v.corollary = v.period > 0 && pl.positive_lcm() % static_cast<std::uint64_t>(v.period) == 0;
    if (!v.corollary && v.detail.empty()) v.detail = "orbit period does not divide the loop-number lcm";

    v.bound = true;
    for (std::size_t c = 0; c < pl.components.size(); ++c) {
        const auto& rs = pl.reduced[c];
        const OrbitHit hit = find_orbit(rs.h, induce_state(rs, pl.restrict_to(static_cast<int>(c), x0)));
        if (hit.transient > pl.bounds[c]) {
            v.bound = false;
            if (v.detail.empty())
                v.detail = "reduced-system transient " + std::to_string(hit.transient) +
                           " exceeds bound " + std::to_string(pl.bounds[c]);
        }
    }
    return v;
}

int default_thread_count() {
    if (const char* env = std::getenv("CBN_LAB_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<int>(std::min<long>(parsed, 64));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

VerifyReport verify_states(const Pipeline& pl, const std::vector<BitState>& states, int threads) {
    VerifyReport report;
    report.period_lcm = pl.positive_lcm();
    report.verdicts.resize(states.size());

    if (threads <= 0) threads = default_thread_count();
    threads = std::min<int>(threads, static_cast<int>(states.size()) > 0
                                         ? static_cast<int>(states.size())
                                         : 1);

    if (threads <= 1 || states.size() < 2) {
        for (std::size_t i = 0; i < states.size(); ++i)
            report.verdicts[i] = verify_state(pl, states[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= states.size()) return;
                report.verdicts[i] = verify_state(pl, states[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& v : report.verdicts)
        if (!v.ok()) ++report.failures;
    return report;
}

} // namespace cbnlab
