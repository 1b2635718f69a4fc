#include "cbnlab/universality.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace cbnlab {

int Monomial::max_variable() const {
    const std::uint32_t all = pos | neg;
    return all == 0 ? -1 : 31 - std::countl_zero(all);
}

std::string Monomial::to_string() const {
    if (constant_one()) return "1";
    std::string out;
    for (int i = 0; i < 32; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if (!((pos | neg) & bit)) continue;
        if (!out.empty()) out += '&';
        if (neg & bit) out += '!';
        out += 'x';
        out += std::to_string(i);
    }
    return out;
}

bool monomial_eval(const Monomial& z, const BitState& x) {
    if (z.max_variable() >= x.width())
        throw std::invalid_argument("monomial_eval: variable index out of range");
    std::uint32_t bits = 0;
    for (int i = 0; i < x.width() && i < 32; ++i)
        if (x.get(i)) bits |= std::uint32_t{1} << i;
    return (bits & z.pos) == z.pos && (bits & z.neg) == 0;
}

namespace {

void sort_unique(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

// Drops monomials implied by a weaker one (literal subset), which keeps
// OR semantics intact pointwise and distributed products small. After
// deduplication the subset relation is antisymmetric, so one pass is
// enough.
void absorb(std::vector<Monomial>& ms) {
    sort_unique(ms);
    std::vector<Monomial> out;
    for (const Monomial& m : ms) {
        bool implied = false;
        for (const Monomial& k : ms) {
            if (k == m) continue;
            if ((m.pos & k.pos) == k.pos && (m.neg & k.neg) == k.neg) {
                implied = true;
                break;
            }
        }
        if (!implied) out.push_back(m);
    }
    ms = std::move(out);
}

// acc := acc AND (OR of factor), distributed; trivial products vanish.
void multiply_in(std::vector<Monomial>& acc, const std::vector<Monomial>& factor,
                 std::size_t blowup_cap) {
    std::vector<Monomial> next;
    for (const Monomial& a : acc) {
        for (const Monomial& f : factor) {
            if (const auto merged = Monomial::make(a.pos | f.pos, a.neg | f.neg))
                next.push_back(*merged);
        }
    }
    absorb(next);
    if (next.size() > blowup_cap) throw ClosureCapExceeded(next.size());
    acc = std::move(next);
}

// The update expression of a monomial: substitute f into each plain
// literal and the De Morgan expansion of NOT f into each negated one.
std::vector<Monomial> substitute(const Monomial& z, const DnfNetwork& net, std::size_t cap) {
    std::vector<Monomial> acc{Monomial{}}; // start from the constant 1
    for (int i = 0; i < net.n && !acc.empty(); ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if (z.pos & bit) {
            multiply_in(acc, net.functions[static_cast<std::size_t>(i)], cap);
        } else if (z.neg & bit) {
            // NOT (OR of monomials) = AND over monomials of (OR of negated literals).
            for (const Monomial& m : net.functions[static_cast<std::size_t>(i)]) {
                std::vector<Monomial> literals;
                for (int v = 0; v < 32; ++v) {
                    const std::uint32_t vb = std::uint32_t{1} << v;
                    if (m.pos & vb) literals.push_back(Monomial{0, vb});
                    if (m.neg & vb) literals.push_back(Monomial{vb, 0});
                }
                // The empty monomial (constant 1) negates to constant 0.
                multiply_in(acc, literals, cap);
                if (acc.empty()) break;
            }
        }
    }
    return acc;
}

} // namespace

DnfNetwork dnf_from_truth_table(const std::vector<std::vector<bool>>& tables) {
    const int n = static_cast<int>(tables.size());
    if (n < 1 || n > 16) throw std::invalid_argument("dnf_from_truth_table: need 1..16 variables");
    const std::size_t rows = std::size_t{1} << n;
    DnfNetwork net;
    net.n = n;
    for (const auto& table : tables) {
        if (table.size() != rows)
            throw std::invalid_argument("dnf_from_truth_table: table length must be 2^n");
        const bool any_zero = std::find(table.begin(), table.end(), false) != table.end();
        const bool any_one = std::find(table.begin(), table.end(), true) != table.end();
        std::vector<Monomial> f;
        if (!any_zero) {
            f.push_back(Monomial{}); // constant 1
        } else if (any_one) {
            for (std::size_t k = 0; k < rows; ++k) {
                if (!table[k]) continue;
                const auto mask = static_cast<std::uint32_t>((std::size_t{1} << n) - 1);
                const auto p = static_cast<std::uint32_t>(k);
                f.push_back(Monomial{p, static_cast<std::uint32_t>(~p) & mask});
            }
        }
        sort_unique(f);
        net.functions.push_back(std::move(f));
    }
    return net;
}

BitState bn_step(const DnfNetwork& net, const BitState& x) {
    if (x.width() != net.n) throw std::invalid_argument("bn_step: width mismatch");
    BitState out(net.n);
    for (int i = 0; i < net.n; ++i) {
        bool bit = false;
        for (const Monomial& z : net.functions[static_cast<std::size_t>(i)]) {
            if (monomial_eval(z, x)) {
                bit = true;
                break;
            }
        }
        out.set(i, bit);
    }
    return out;
}

int MonomialDbn::index_of(const Monomial& z) const {
    const auto it = std::lower_bound(states.begin(), states.end(), z);
    if (it == states.end() || !(*it == z)) return -1;
    return static_cast<int>(it - states.begin());
}

MonomialDbn build_monomial_dbn(const DnfNetwork& net, std::size_t cap) {
    std::map<Monomial, std::vector<Monomial>> closure; // monomial -> its update expression
    std::vector<Monomial> worklist;
    auto snapshot = [&] {
        std::vector<Monomial> seen;
        seen.reserve(closure.size());
        for (const auto& [z, _] : closure) seen.push_back(z);
        return seen;
    };
    auto enqueue = [&](const Monomial& z) {
        if (closure.count(z)) return;
        closure.emplace(z, std::vector<Monomial>{});
        worklist.push_back(z);
        if (closure.size() > cap) throw ClosureCapExceeded(closure.size(), snapshot());
    };
    for (const auto& f : net.functions)
        for (const Monomial& z : f) enqueue(z);

    while (!worklist.empty()) {
        const Monomial z = worklist.back();
        worklist.pop_back();
        std::vector<Monomial> expansion;
        try {
            expansion = substitute(z, net, cap);
        } catch (const ClosureCapExceeded& e) {
            throw ClosureCapExceeded(e.reached, snapshot());
        }
        for (const Monomial& w : expansion) enqueue(w);
        closure[z] = std::move(expansion);
    }

    MonomialDbn dbn;
    dbn.states.reserve(closure.size());
    for (const auto& [z, _] : closure) dbn.states.push_back(z);
    dbn.update.resize(dbn.states.size());
    for (const auto& [z, expansion] : closure) {
        auto& row = dbn.update[static_cast<std::size_t>(dbn.index_of(z))];
        for (const Monomial& w : expansion) row.push_back(dbn.index_of(w));
        std::sort(row.begin(), row.end());
    }
    for (const auto& f : net.functions) {
        std::vector<int> ids;
        for (const Monomial& z : f) ids.push_back(dbn.index_of(z));
        std::sort(ids.begin(), ids.end());
        dbn.seeds.push_back(std::move(ids));
    }
    return dbn;
}

BitState dbn_step(const MonomialDbn& dbn, const BitState& z) {
    const int n = static_cast<int>(dbn.states.size());
    if (z.width() != n) throw std::invalid_argument("dbn_step: width mismatch");
    BitState out(n);
    for (int i = 0; i < n; ++i) {
        bool bit = false;
        for (const int w : dbn.update[static_cast<std::size_t>(i)]) {
            if (z.get(w)) {
                bit = true;
                break;
            }
        }
        out.set(i, bit);
    }
    return out;
}

BitState initial_dbn_state(const MonomialDbn& dbn, const BitState& x0) {
    BitState z(static_cast<int>(dbn.states.size()));
    for (std::size_t i = 0; i < dbn.states.size(); ++i)
        z.set(static_cast<int>(i), monomial_eval(dbn.states[i], x0));
    return z;
}

BitState project(const MonomialDbn& dbn, const DnfNetwork& net, const BitState& z_state) {
    if (z_state.width() != static_cast<int>(dbn.states.size()))
        throw std::invalid_argument("project: width mismatch");
    BitState x(net.n);
    for (int i = 0; i < net.n; ++i) {
        bool bit = false;
        for (const int z : dbn.seeds[static_cast<std::size_t>(i)]) {
            if (z_state.get(z)) {
                bit = true;
                break;
            }
        }
        x.set(i, bit);
    }
    return x;
}

CbnConversion dbn_to_cbn(const MonomialDbn& dbn) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t z = 0; z < dbn.update.size(); ++z)
        for (const int w : dbn.update[z]) edges.emplace_back(w, static_cast<int>(z));
    return CbnConversion{Digraph(static_cast<int>(dbn.states.size()), std::move(edges))};
}

} // namespace cbnlab
