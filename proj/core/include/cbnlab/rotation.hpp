#ifndef CBNLAB_ROTATION_HPP
#define CBNLAB_ROTATION_HPP

#include <cstddef>
#include <functional>

namespace cbnlab {

/// Index of the lexicographically least rotation of `s` (Booth's
/// two-cursor scan). `less` must be a strict weak order on elements.
template <class Seq, class Less = std::less<typename Seq::value_type>>
std::size_t least_rotation_index(const Seq& s, Less less = {}) {
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const auto& a = s[(i + k) % n];
        const auto& b = s[(j + k) % n];
        if (!less(a, b) && !less(b, a)) {
            ++k;
        } else if (less(b, a)) {
            i = i + k + 1;
            if (i == j) ++i;
            k = 0;
        } else {
            j = j + k + 1;
            if (j == i) ++j;
            k = 0;
        }
    }
    return i < j ? i : j;
}

} // namespace cbnlab

#endif
