#pragma once

#include "gcmv/bracket.hpp"
#include "gcmv/point_config.hpp"
#include "gcmv/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace gcmv {

/// Product of brackets with a rational coefficient. The bracket multiset is
/// kept sorted so monomials compare structurally.
struct BracketMonomial {
    Scalar coeff;
    std::vector<Bracket> brackets; // sorted, all of the polynomial's rank

    friend bool operator==(const BracketMonomial&, const BracketMonomial&) = default;
};

/// Exact linear combination of bracket products of a fixed rank.
/// Terms are kept in lexicographic order with no zero coefficients, so
/// operator== is equality in the free bracket ring (not modulo Plücker).
class BracketPolynomial {
public:
    explicit BracketPolynomial(int rank = 0) : rank_(rank) {}

    static BracketPolynomial constant(int rank, const Scalar& c);
    static BracketPolynomial single(int rank, const Bracket& b, const Scalar& c = Scalar(1));

    [[nodiscard]] int rank() const { return rank_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] std::vector<BracketMonomial> terms() const;
    [[nodiscard]] int max_label() const;

    void add_term(const std::vector<Bracket>& brackets, const Scalar& c);

    BracketPolynomial operator-() const;
    BracketPolynomial& operator+=(const BracketPolynomial& o);
    BracketPolynomial& operator-=(const BracketPolynomial& o);
    BracketPolynomial& operator*=(const BracketPolynomial& o);
    BracketPolynomial& operator*=(const Scalar& c);

    friend BracketPolynomial operator+(BracketPolynomial a, const BracketPolynomial& b) {
        return a += b;
    }
    friend BracketPolynomial operator-(BracketPolynomial a, const BracketPolynomial& b) {
        return a -= b;
    }
    friend BracketPolynomial operator*(BracketPolynomial a, const BracketPolynomial& b) {
        return a *= b;
    }
    friend BracketPolynomial operator*(BracketPolynomial a, const Scalar& c) { return a *= c; }
    friend BracketPolynomial operator*(const Scalar& c, BracketPolynomial a) { return a *= c; }

    friend bool operator==(const BracketPolynomial&, const BracketPolynomial&) = default;

    /// Text form `+ 1 [123][456] - 1 [124][356]`; `0` for the zero polynomial.
    /// Labels inside a bracket are space-separated when any exceeds 9.
    [[nodiscard]] std::string text() const;
    static BracketPolynomial parse_text(int rank, const std::string& text);

private:
    void check_rank(const BracketPolynomial& o) const;

    int rank_;
    std::map<std::vector<Bracket>, Scalar> terms_;
};

/// Exact value of p on a configuration: each bracket is the minor of the
/// indexed columns. Throws on rank mismatch or out-of-range labels.
Scalar evaluate(const BracketPolynomial& p, const PointConfig& c);

/// Value of a single bracket on a configuration.
Scalar evaluate(const Bracket& b, const PointConfig& c);

/// The rank-3 three-term Grassmann-Plücker relation
/// [l1l2l3][l1l4l5] - [l1l2l4][l1l3l5] + [l1l2l5][l1l3l4]
/// with all brackets normalized. Throws on repeated labels.
BracketPolynomial gp_relation(int l1, int l2, int l3, int l4, int l5);

} // namespace gcmv
