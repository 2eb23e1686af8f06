#pragma once

#include "gcmv/bracket_polynomial.hpp"
#include "gcmv/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gcmv {

/// Sparse exact polynomial in the entries x[s][t] of a generic r x n matrix.
/// Monomials are exponent vectors of length r*n in lexicographic order.
class CoordPolynomial {
public:
    CoordPolynomial(int r = 0, int n = 0) : r_(r), n_(n) {}

    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of the lexicographically first monomial; zero when empty.
    [[nodiscard]] Scalar leading_coefficient() const;

    void add_term(const std::vector<std::uint16_t>& expo, const Scalar& c);

    CoordPolynomial operator-() const;
    CoordPolynomial& operator+=(const CoordPolynomial& o);
    CoordPolynomial& operator-=(const CoordPolynomial& o);
    CoordPolynomial& operator*=(const CoordPolynomial& o);
    CoordPolynomial& operator*=(const Scalar& c);

    friend CoordPolynomial operator+(CoordPolynomial a, const CoordPolynomial& b) { return a += b; }
    friend CoordPolynomial operator-(CoordPolynomial a, const CoordPolynomial& b) { return a -= b; }
    friend CoordPolynomial operator*(CoordPolynomial a, const CoordPolynomial& b) { return a *= b; }

    friend bool operator==(const CoordPolynomial&, const CoordPolynomial&) = default;

private:
    int r_, n_;
    std::map<std::vector<std::uint16_t>, Scalar> terms_;
};

/// Substitutes every bracket by the corresponding symbolic r x r minor of a
/// generic r x n matrix and expands exactly. The kernel of this substitution
/// is precisely the Plücker ideal, so two bracket polynomials agree in the
/// coordinate ring of the Grassmannian iff their expansions agree.
CoordPolynomial generic_expand(const BracketPolynomial& p, int n);

/// Equality modulo the Plücker ideal, decided by generic expansion.
bool equal_mod_plucker(const BracketPolynomial& p, const BracketPolynomial& q);

/// The unique nonzero c with p = c*q modulo the Plücker ideal, if it exists.
std::optional<Scalar> proportional_mod_plucker(const BracketPolynomial& p,
                                               const BracketPolynomial& q);

} // namespace gcmv
