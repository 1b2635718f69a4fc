#ifndef CBNLAB_UNIVERSALITY_HPP
#define CBNLAB_UNIVERSALITY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbnlab/bitstate.hpp"
#include "cbnlab/digraph.hpp"

namespace cbnlab {

/// A reduced, nontrivial product of literals over variables 0..n-1:
/// `pos` holds the plain variables, `neg` the negated ones, as bitmasks.
/// pos & neg == 0 always; the empty monomial (pos == neg == 0) is the
/// constant 1.
struct Monomial {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;

    /// Rejects trivial products (a variable multiplied by its negation).
    static std::optional<Monomial> make(std::uint32_t pos, std::uint32_t neg) {
        if (pos & neg) return std::nullopt;
        return Monomial{pos, neg};
    }
    bool constant_one() const { return pos == 0 && neg == 0; }
    int max_variable() const; // -1 for the empty monomial
    std::string to_string() const; // "1", "x0&x2&!x3"

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// AND of the monomial's literals on state x. Throws if the monomial
/// mentions a variable beyond x's width.
bool monomial_eval(const Monomial& z, const BitState& x);

/// A Boolean network in disjunctive normal form: per variable, the OR of
/// a set of monomials. The empty set is the constant 0, the set holding
/// only the empty monomial is the constant 1.
struct DnfNetwork {
    int n = 0;
    std::vector<std::vector<Monomial>> functions; // each sorted, deduplicated
};

/// Minterm-expansion DNF of per-variable truth tables. tables[i][k] is
/// f_i at the input whose bit j equals (k >> j) & 1. Guarded to n <= 16;
/// constant functions collapse to their canonical encodings.
DnfNetwork dnf_from_truth_table(const std::vector<std::vector<bool>>& tables);

/// One synchronous update of the network.
BitState bn_step(const DnfNetwork& net, const BitState& x);

struct ClosureCapExceeded : std::runtime_error {
    std::size_t reached;
    std::vector<Monomial> partial; // closure discovered before the cap hit

    explicit ClosureCapExceeded(std::size_t count, std::vector<Monomial> seen = {})
        : std::runtime_error("monomial closure exceeded its cap at " + std::to_string(count) +
                             " monomials"),
          reached(count),
          partial(std::move(seen)) {}
};

/// The disjunctive network over monomials induced by a DNF network: the
/// states are the seed monomials of all f_i closed under substitution,
/// and each monomial updates to the OR of `update[z]`.
struct MonomialDbn {
    std::vector<Monomial> states;          // sorted closure
    std::vector<std::vector<int>> update;  // per state: sorted indices into states
    std::vector<std::vector<int>> seeds;   // per original variable: indices into states

    int index_of(const Monomial& z) const; // -1 if absent
};

/// Substitutes the network into every monomial, distributing products
/// over ORs and dropping trivial products, until the monomial set is
/// closed. Throws ClosureCapExceeded past `cap` monomials.
MonomialDbn build_monomial_dbn(const DnfNetwork& net, std::size_t cap = 10000);

/// One synchronous update of the monomial network (OR over update sets).
BitState dbn_step(const MonomialDbn& dbn, const BitState& z);

/// Monomial states consistent with an original-network state.
BitState initial_dbn_state(const MonomialDbn& dbn, const BitState& x0);

/// Original-variable state one step ahead of a monomial state: each
/// variable is the OR over its seed monomials.
BitState project(const MonomialDbn& dbn, const DnfNetwork& net, const BitState& z_state);

/// The conjunctive network equivalent to the monomial network: same
/// dependency structure (an edge w -> z whenever w is in update[z]), run
/// on complemented states. to_cbn_state is that complementation.
struct CbnConversion {
    Digraph graph;
    BitState to_cbn_state(const BitState& dbn_state) const { return dbn_state.complement(); }
};

CbnConversion dbn_to_cbn(const MonomialDbn& dbn);

} // namespace cbnlab

#endif
