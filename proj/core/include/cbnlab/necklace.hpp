#ifndef CBNLAB_NECKLACE_HPP
#define CBNLAB_NECKLACE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cbnlab/digraph.hpp"
#include "cbnlab/dynamics.hpp"
#include "cbnlab/scc.hpp"

namespace cbnlab {

/// A rotation class of binary strings, stored as the lexicographically
/// least rotation.
struct Necklace {
    int length = 0;
    std::string word; // canonical '0'/'1' string, word.size() == length

    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend bool operator<(const Necklace& a, const Necklace& b) { return a.word < b.word; }
};

/// Canonical form of a bit string. Throws on empty input or bad chars.
Necklace canonicalize(std::string_view bits);

/// All necklaces of length p, sorted by word. Throws for p < 1.
std::vector<Necklace> enumerate_necklaces(int p);

/// Cardinality of the rotation class, i.e. the word's smallest period.
/// Always a divisor of p.
int necklace_order(const Necklace& s);

/// Number of necklaces of length p: (1/p) * sum over d | p of phi(d) 2^(p/d).
std::uint64_t necklace_count(int p);

/// For a strongly connected CBN with loop number p > 0: the periodic orbit
/// obtained by holding every class j constant at word[j]. The built state
/// is already periodic (transient 0) and the orbit's period equals the
/// necklace's order.
PeriodicOrbit orbit_from_necklace(const Digraph& g, const ClassPartition& cp, const Necklace& s);

/// Inverse of orbit_from_necklace up to rotation: reads one bit per class
/// off an orbit state. Throws if some class is not constant on the state
/// (which means the input is not an orbit of this CBN).
Necklace necklace_from_orbit(const Digraph& g, const ClassPartition& cp, const PeriodicOrbit& o);

} // namespace cbnlab

#endif
