#include "gcmv/subsets.hpp"

#include <algorithm>

namespace gcmv {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::size_t subset_rank(std::span<const int> subset, int n) {
    // Count subsets preceding it lexicographically.
    std::size_t rank = 0;
    int k = static_cast<int>(subset.size());
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[static_cast<std::size_t>(i)]; ++v)
            rank += binomial(n - v, k - i - 1);
        prev = subset[static_cast<std::size_t>(i)];
    }
    return rank;
}

int sort_with_sign(std::vector<int>& values) {
    int sign = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::size_t min_at = i;
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[j] < values[min_at]) min_at = j;
        if (min_at != i) {
            std::swap(values[i], values[min_at]);
            sign = -sign;
        }
    }
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] == values[i + 1]) return 0;
    return sign;
}

int permutation_sign(std::span<const int> perm) {
    std::vector<int> v(perm.begin(), perm.end());
    return sort_with_sign(v);
}

} // namespace gcmv
