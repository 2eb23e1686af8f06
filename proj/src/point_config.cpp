#include "gcmv/point_config.hpp"

#include "gcmv/errors.hpp"

namespace gcmv {

std::string to_string(ColumnKind k) {
    switch (k) {
        case ColumnKind::original: return "original";
        case ColumnKind::auxiliary: return "auxiliary";
        case ColumnKind::zeroed: return "zeroed";
    }
    return "original";
}

ColumnKind column_kind_from_string(const std::string& s) {
    if (s == "original") return ColumnKind::original;
    if (s == "auxiliary") return ColumnKind::auxiliary;
    if (s == "zeroed") return ColumnKind::zeroed;
    throw std::invalid_argument("unknown column annotation '" + s + "'");
}

void PointConfig::check_label(int label) const {
    if (label < 1 || label > n)
        throw LabelError("label " + std::to_string(label) + " outside 1.." + std::to_string(n));
}

std::vector<Scalar> PointConfig::column(int label) const {
    check_label(label);
    return mat.column(static_cast<std::size_t>(label - 1));
}

void PointConfig::set_column(int label, const std::vector<Scalar>& coords, ColumnKind kind) {
    check_label(label);
    if (coords.size() != static_cast<std::size_t>(r))
        throw DimensionError("set_column: expected " + std::to_string(r) + " coordinates");
    for (int i = 0; i < r; ++i)
        mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(label - 1)) =
            coords[static_cast<std::size_t>(i)];
    kinds[static_cast<std::size_t>(label - 1)] = kind;
}

void PointConfig::zero_column(int label) {
    check_label(label);
    for (int i = 0; i < r; ++i)
        mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(label - 1)) = Scalar(0);
    kinds[static_cast<std::size_t>(label - 1)] = ColumnKind::zeroed;
}

PointConfig apply_row_action(const RatMatrix& g, const PointConfig& c) {
    if (g.rows() != static_cast<std::size_t>(c.r) || g.cols() != static_cast<std::size_t>(c.r))
        throw DimensionError("apply_row_action: g must be r x r");
    PointConfig out = c;
    for (int j = 0; j < c.n; ++j)
        for (int i = 0; i < c.r; ++i) {
            Scalar s(0);
            for (int k = 0; k < c.r; ++k)
                s += g.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) *
                     c.mat.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
            out.mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
        }
    return out;
}

PointConfig scale_columns(const PointConfig& c, const std::vector<Scalar>& factors) {
    if (factors.size() != static_cast<std::size_t>(c.n))
        throw DimensionError("scale_columns: need one factor per column");
    PointConfig out = c;
    for (int j = 0; j < c.n; ++j) {
        if (factors[static_cast<std::size_t>(j)].is_zero())
            throw std::domain_error("scale_columns: zero factor");
        for (int i = 0; i < c.r; ++i)
            out.mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *=
                factors[static_cast<std::size_t>(j)];
    }
    return out;
}

} // namespace gcmv
