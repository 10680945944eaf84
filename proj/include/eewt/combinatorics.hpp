#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace eewt {

// Binomial coefficient, saturating at uint64 max instead of overflowing.
inline std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - r + i);
        if (result > kMax / num) return kMax;
        result = result * num / static_cast<std::uint64_t>(i);
    }
    return result;
}

// Calls fn for every size-r subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int r, Fn&& fn) {
    if (r < 0 || r > n) return;
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace eewt
