#include "cbnlab/bitstate.hpp"

#include <bit>
#include <stdexcept>

namespace cbnlab {

namespace {
std::uint64_t tail_mask(int n) {
    const int rem = n & 63;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}
} // namespace

BitState::BitState(int width, bool fill) : n_(width) {
    if (width < 0) throw std::invalid_argument("BitState: negative width");
    w_.assign((static_cast<std::size_t>(width) + 63) / 64, fill ? ~std::uint64_t{0} : 0);
    if (fill && !w_.empty()) w_.back() &= tail_mask(width);
}

BitState BitState::from_word(int width, std::uint64_t bits) {
    if (width < 0 || width > 64) throw std::invalid_argument("BitState::from_word: width must be in [0, 64]");
    BitState s(width);
    if (width > 0) s.w_[0] = bits & tail_mask(width);
    return s;
}

BitState BitState::from_string(std::string_view str) {
    BitState s(static_cast<int>(str.size()));
    for (int i = 0; i < s.n_; ++i) {
        const char c = str[static_cast<std::size_t>(i)];
        if (c == '1') {
            s.set(i, true);
        } else if (c != '0') {
            throw std::invalid_argument("BitState::from_string: expected only '0'/'1'");
        }
    }
    return s;
}

bool BitState::all_ones() const {
    if (n_ == 0) return true;
    for (std::size_t k = 0; k + 1 < w_.size(); ++k)
        if (w_[k] != ~std::uint64_t{0}) return false;
    return w_.back() == tail_mask(n_);
}

bool BitState::all_zeros() const {
    for (const auto w : w_)
        if (w != 0) return false;
    return true;
}

int BitState::popcount() const {
    int c = 0;
    for (const auto w : w_) c += std::popcount(w);
    return c;
}

std::string BitState::to_string() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

bool BitState::dominates(const BitState& a, const BitState& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("BitState::dominates: width mismatch");
    for (std::size_t k = 0; k < a.w_.size(); ++k)
        if ((a.w_[k] & b.w_[k]) != b.w_[k]) return false;
    return true;
}

bool BitState::lex_less(const BitState& other) const {
    if (n_ != other.n_) throw std::invalid_argument("BitState::lex_less: width mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) {
        const std::uint64_t diff = w_[k] ^ other.w_[k];
        if (diff != 0) {
            // Lowest differing bit index decides: vertex 0 is most significant.
            const int bit = std::countr_zero(diff);
            return ((other.w_[k] >> bit) & 1u) != 0;
        }
    }
    return false;
}

BitState BitState::bitwise_and(const BitState& a, const BitState& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("BitState::bitwise_and: width mismatch");
    BitState out(a.n_);
    for (std::size_t k = 0; k < a.w_.size(); ++k) out.w_[k] = a.w_[k] & b.w_[k];
    return out;
}

BitState BitState::complement() const {
    BitState out(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) out.w_[k] = ~w_[k];
    if (!out.w_.empty()) out.w_.back() &= tail_mask(n_);
    return out;
}

} // namespace cbnlab
