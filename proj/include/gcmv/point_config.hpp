#pragma once

#include "gcmv/rat_matrix.hpp"

#include <string>
#include <vector>

namespace gcmv {

/// Where a column came from. Purely descriptive; no operation branches on it.
enum class ColumnKind { original, auxiliary, zeroed };

std::string to_string(ColumnKind k);
ColumnKind column_kind_from_string(const std::string& s);

/// r x n matrix of homogeneous point coordinates, one point per column.
/// Columns may be zero (loops). Labels are 1-based throughout.
struct PointConfig {
    int r = 0;
    int n = 0;
    RatMatrix mat;                  // r rows, n columns
    std::vector<ColumnKind> kinds;  // size n

    PointConfig() = default;
    PointConfig(int r, int n)
        : r(r), n(n), mat(static_cast<std::size_t>(r), static_cast<std::size_t>(n)),
          kinds(static_cast<std::size_t>(n), ColumnKind::original) {}

    [[nodiscard]] std::vector<Scalar> column(int label) const;
    void set_column(int label, const std::vector<Scalar>& coords,
                    ColumnKind kind = ColumnKind::original);
    void zero_column(int label);

    /// Throws LabelError unless 1 <= label <= n.
    void check_label(int label) const;
};

/// Left-multiplies every column by `g` (a change of basis on the rows).
PointConfig apply_row_action(const RatMatrix& g, const PointConfig& c);

/// Scales column j by factors[j-1]; factors must all be nonzero.
PointConfig scale_columns(const PointConfig& c, const std::vector<Scalar>& factors);

} // namespace gcmv
