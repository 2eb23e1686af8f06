#include "gcmv/matroid.hpp"

#include "gcmv/errors.hpp"
#include "gcmv/subsets.hpp"

#include <cstdint>
#include <unordered_set>

namespace gcmv {

Matroid matroid_from_config(const PointConfig& c) {
    if (rank(c.mat) != static_cast<std::size_t>(c.r))
        throw DegeneracyError("matroid_from_config: rows are dependent (rank below " +
                              std::to_string(c.r) + ")");
    Matroid m;
    m.r = c.r;
    m.n = c.n;
    for (const auto& subset : k_subsets(c.n, c.r)) {
        std::vector<std::size_t> cols;
        cols.reserve(subset.size());
        for (int l : subset) cols.push_back(static_cast<std::size_t>(l - 1));
        if (!det(c.mat.select_columns(cols)).is_zero()) m.bases.insert(subset);
    }
    return m;
}

std::vector<std::vector<int>> nonbases(const Matroid& m) {
    std::vector<std::vector<int>> out;
    for (const auto& subset : k_subsets(m.n, m.r))
        if (!m.bases.contains(subset)) out.push_back(subset);
    return out;
}

std::vector<Bracket> n_ideal_generators(const Matroid& m) {
    std::vector<Bracket> out;
    for (const auto& nb : nonbases(m)) out.push_back(Bracket{nb});
    return out;
}

BracketMonomial j_generator(const Matroid& m) {
    BracketMonomial mono;
    mono.coeff = Scalar(1);
    for (const auto& b : m.bases) mono.brackets.push_back(Bracket{b});
    return mono;
}

bool same_matroid(const Matroid& a, const Matroid& b) {
    if (a.r != b.r || a.n != b.n)
        throw DimensionError("same_matroid: (r, n) differ");
    return a.bases == b.bases;
}

bool exchange_axiom_holds(const Matroid& m) {
    if (m.bases.empty()) return false;
    if (m.n > 63) throw DimensionError("exchange_axiom_holds: ground set too large");
    // Bitmask encoding keeps the all-pairs check cheap.
    std::vector<std::uint64_t> masks;
    std::unordered_set<std::uint64_t> basis_set;
    for (const auto& b : m.bases) {
        std::uint64_t mask = 0;
        for (int l : b) mask |= std::uint64_t{1} << l;
        masks.push_back(mask);
        basis_set.insert(mask);
    }
    for (std::uint64_t a : masks)
        for (std::uint64_t b : masks) {
            std::uint64_t only_a = a & ~b;
            std::uint64_t only_b = b & ~a;
            for (std::uint64_t rest = only_a; rest;) {
                std::uint64_t beta = rest & (~rest + 1);
                rest ^= beta;
                bool found = false;
                for (std::uint64_t cand = only_b; cand && !found;) {
                    std::uint64_t beta2 = cand & (~cand + 1);
                    cand ^= beta2;
                    found = basis_set.contains((a ^ beta) | beta2);
                }
                if (!found) return false;
            }
        }
    return true;
}

} // namespace gcmv
