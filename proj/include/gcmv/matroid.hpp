#pragma once

#include "gcmv/bracket_polynomial.hpp"
#include "gcmv/point_config.hpp"

#include <set>
#include <vector>

namespace gcmv {

/// Matroid given by rank, ground set size and an explicit basis family.
struct Matroid {
    int r = 0;
    int n = 0;
    std::set<std::vector<int>> bases; // sorted r-subsets of {1..n}

    friend bool operator==(const Matroid&, const Matroid&) = default;
};

/// Matroid of the columns: bases are the r-subsets with nonzero minor.
/// Throws DegeneracyError when the rows are dependent (rank below r).
Matroid matroid_from_config(const PointConfig& c);

/// Complement of the bases among all r-subsets, lexicographically sorted.
std::vector<std::vector<int>> nonbases(const Matroid& m);

/// One normalized bracket per nonbasis (generators of the ideal N).
std::vector<Bracket> n_ideal_generators(const Matroid& m);

/// The single monomial with coefficient 1 whose factors are all basis
/// brackets (generator of the ideal J).
BracketMonomial j_generator(const Matroid& m);

/// Basis-set equality. Throws DimensionError when (r, n) differ.
bool same_matroid(const Matroid& a, const Matroid& b);

/// Exhaustive check of the basis exchange axiom.
bool exchange_axiom_holds(const Matroid& m);

} // namespace gcmv
