#include "gcmv/rat_matrix.hpp"

#include "gcmv/errors.hpp"

#include <gmpxx.h>

namespace gcmv {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
    RatMatrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(i, j) = at(i, cols[j]);
    return out;
}

std::vector<Scalar> RatMatrix::column(std::size_t j) const {
    std::vector<Scalar> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

namespace {

// Clears denominators row by row; returns the integer matrix and the
// product of the row multipliers (each row was scaled by an lcm > 0).
std::pair<std::vector<std::vector<mpz_class>>, mpz_class>
clear_denominators(const RatMatrix& m) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& e = m.at(i, j);
            z[i][j] = e.numerator() * (l / e.denominator());
        }
        scale *= l;
    }
    return {std::move(z), std::move(scale)};
}

// Fraction-free elimination on an integer matrix. Runs Bareiss steps with
// row (and optionally column) pivoting. Returns the number of pivots; when
// `det_out` is non-null the matrix must be square and column swaps are
// disabled so the determinant sign stays tracked.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, bool allow_col_swaps,
                    mpz_class* det_out) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    mpz_class prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; r < rows && c < cols; ++c) {
        // Find a nonzero pivot at or below (r, c); search later columns too
        // when column swaps are allowed.
        std::size_t pi = rows, pj = cols;
        for (std::size_t j = c; j < (allow_col_swaps ? cols : c + 1) && pi == rows; ++j)
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        if (pj != c) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][c]);
        }
        if (pi != r) {
            std::swap(a[pi], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det_out) {
        if (r < rows)
            *det_out = 0;
        else
            *det_out = sign * a[rows - 1][rows - 1];
    }
    return r;
}

} // namespace

Scalar det(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", not square");
    if (m.rows() == 0) return Scalar(1);
    auto [z, scale] = clear_denominators(m);
    mpz_class d;
    bareiss(z, /*allow_col_swaps=*/false, &d);
    mpq_class q(d, scale);
    q.canonicalize();
    return Scalar(q);
}

std::size_t rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto [z, scale] = clear_denominators(m);
    return bareiss(z, /*allow_col_swaps=*/true, nullptr);
}

std::vector<std::vector<Scalar>> nullspace(const RatMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // Reduced row echelon form over the rationals; sizes here stay small
    // enough that entry growth is not a concern.
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<std::vector<Scalar>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        std::vector<Scalar> v(cols);
        v[c] = Scalar(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gcmv
