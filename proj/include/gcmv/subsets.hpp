#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gcmv {

/// Binomial coefficient C(n, k); 0 when k > n.
std::uint64_t binomial(int n, int k);

/// All k-element subsets of {1, ..., n}, each sorted, in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Position of a sorted k-subset of {1, ..., n} in the lexicographic listing.
std::size_t subset_rank(std::span<const int> subset, int n);

/// Sorts `values` in place and returns the permutation sign (+1/-1),
/// or 0 if two entries are equal.
int sort_with_sign(std::vector<int>& values);

/// Parity (+1/-1) of the permutation mapping 0..n-1 to `perm`.
int permutation_sign(std::span<const int> perm);

} // namespace gcmv
