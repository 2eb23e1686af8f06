#pragma once

#include "gcmv/bracket_polynomial.hpp"
#include "gcmv/expression.hpp"
#include "gcmv/extensor.hpp"
#include "gcmv/point_config.hpp"

#include <map>
#include <vector>

namespace gcmv {

/// Symbolic extensor: a sum of point-symbol words with bracket-polynomial
/// coefficients. Words are kept sorted and repeat-free; the antisymmetry sign
/// is absorbed into the coefficient. Steps above the ambient rank are zero.
class FormalExtensor {
public:
    FormalExtensor(int r, int step) : r_(r), step_(step) {}

    static FormalExtensor atom(int r, int label);

    [[nodiscard]] int ambient_rank() const { return r_; }
    [[nodiscard]] int step() const { return step_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<std::vector<int>, BracketPolynomial>& terms() const {
        return terms_;
    }

    /// Adds coeff * (word), normalizing the word's order and sign.
    void add_term(std::vector<int> word, const BracketPolynomial& coeff);

    /// Scalar form: requires step r (words contract to brackets), step 0, or
    /// the zero extensor. Throws DimensionError otherwise.
    [[nodiscard]] BracketPolynomial as_bracket_polynomial() const;

private:
    int r_, step_;
    std::map<std::vector<int>, BracketPolynomial> terms_;
};

FormalExtensor symbolic_join(const FormalExtensor& a, const FormalExtensor& b);
FormalExtensor symbolic_meet(const FormalExtensor& a, const FormalExtensor& b);

/// Exact symbolic expansion of an expression in a rank-r algebra.
FormalExtensor expand_symbolic(const GcExpression& e, int r);

/// expand_symbolic followed by contraction to a bracket polynomial.
BracketPolynomial expand_to_brackets(const GcExpression& e, int r);

/// Recursive numeric evaluation: atoms become step-1 extensors from the
/// configuration's columns (zero columns give zero extensors).
Extensor eval_numeric(const GcExpression& e, const PointConfig& c);

} // namespace gcmv
