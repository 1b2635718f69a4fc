#ifndef CBNLAB_BITSTATE_HPP
#define CBNLAB_BITSTATE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cbnlab {

/// One Boolean value per network vertex, packed into 64-bit words.
/// Bit i lives in word i/64 at position i%64; unused high bits are zero,
/// so whole-word comparisons are valid. States of width <= 64 round-trip
/// through a single word (see low_word / from_word), which is the fast
/// path used by exhaustive sweeps.
class BitState {
public:
    BitState() = default;
    explicit BitState(int width, bool fill = false);

    /// Builds a state of width n (n <= 64) from the low n bits of `bits`.
    static BitState from_word(int width, std::uint64_t bits);
    /// Parses a '0'/'1' string, vertex 0 leftmost. Throws on other chars.
    static BitState from_string(std::string_view s);

    int width() const { return n_; }
    int word_count() const { return static_cast<int>(w_.size()); }
    std::uint64_t word(int k) const { return w_[static_cast<std::size_t>(k)]; }
    /// The single backing word; only meaningful when width() <= 64.
    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    bool get(int i) const {
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        auto& w = w_[static_cast<std::size_t>(i) >> 6];
        w = v ? (w | mask) : (w & ~mask);
    }

    bool all_ones() const;
    bool all_zeros() const;
    int popcount() const;

    /// Renders as a '0'/'1' string, vertex 0 leftmost.
    std::string to_string() const;

    friend bool operator==(const BitState&, const BitState&) = default;

    /// Entry-wise partial order: every bit of `a` >= the matching bit of `b`.
    static bool dominates(const BitState& a, const BitState& b);

    /// Strict total order treating the state as the binary string
    /// produced by to_string() (vertex 0 most significant).
    bool lex_less(const BitState& other) const;

    /// Entry-wise AND; widths must match.
    static BitState bitwise_and(const BitState& a, const BitState& b);
    /// Flips every bit.
    BitState complement() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace cbnlab

#endif
