#pragma once

#include <cstddef>
#include <vector>

namespace hullsum {

/// Calls fn(indices) for every strictly increasing r-subset of {0..n-1}, in
/// lexicographic order. Stops early if fn returns false.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
    if (r > n) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Calls fn(indices) for every nondecreasing length-r sequence over
/// {0..n-1} (multisets of size r), in lexicographic order.
template <typename Fn>
void for_each_multiset(std::size_t n, std::size_t r, Fn&& fn) {
    if (n == 0) return;
    std::vector<std::size_t> idx(r, 0);
    for (;;) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - 1) --i;
        if (i == 0) return;
        const std::size_t v = idx[i - 1] + 1;
        for (std::size_t j = i - 1; j < r; ++j) idx[j] = v;
    }
}

}  // namespace hullsum
