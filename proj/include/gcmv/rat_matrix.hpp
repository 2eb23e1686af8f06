#pragma once

#include "gcmv/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gcmv {

/// Dense matrix of exact rationals. Rows and columns are 0-indexed here;
/// point labels (1-based) are translated by the callers that use them.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    /// New matrix keeping the given columns, in the given order.
    [[nodiscard]] RatMatrix select_columns(std::span<const std::size_t> cols) const;

    [[nodiscard]] std::vector<Scalar> column(std::size_t j) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Throws DimensionError unless square.
Scalar det(const RatMatrix& m);

/// Exact rank over the rationals.
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel as column vectors; empty iff full column rank.
std::vector<std::vector<Scalar>> nullspace(const RatMatrix& m);

} // namespace gcmv
