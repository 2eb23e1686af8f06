#pragma once

#include "gcmv/expression.hpp"
#include "gcmv/extensor.hpp"
#include "gcmv/matroid.hpp"
#include "gcmv/point_config.hpp"
#include "gcmv/scalar.hpp"

#include <array>
#include <vector>

namespace gcmv {

/// Homogeneous coordinates of a projective point (nonzero vector).
using ProjectivePoint = std::vector<Scalar>;

/// Projective equality (proportionality of nonzero vectors).
bool proj_equal(const ProjectivePoint& a, const ProjectivePoint& b);

/// Removes projective duplicates, keeping first occurrences in order.
std::vector<ProjectivePoint> dedup_points(const std::vector<ProjectivePoint>& points);

/// (1, t, t^2): a point of the conic xz = y^2.
ProjectivePoint conic_point(const Scalar& t);

/// (1, t, ..., t^d): a point of the degree-d rational normal curve.
/// Throws std::invalid_argument for d < 2.
ProjectivePoint moment_point(const Scalar& t, int d);

/// Join of two distinct points; throws DegeneracyError when they coincide.
Extensor line_through(const ProjectivePoint& p, const ProjectivePoint& q);

/// Meet of two step-2 extensors in the plane; zero when the lines coincide.
Extensor line_intersection(const Extensor& a, const Extensor& b);

// ---------------------------------------------------------------------------
// Pencil of three lines through a marked point (7 points, rank 3).
// ---------------------------------------------------------------------------

struct PencilSpec {
    ProjectivePoint apex{Scalar(0), Scalar(0), Scalar(1)};
    std::array<ProjectivePoint, 3> directions{
        ProjectivePoint{Scalar(0), Scalar(1), Scalar(0)},   // x = 0
        ProjectivePoint{Scalar(1), Scalar(0), Scalar(0)},   // y = 0
        ProjectivePoint{Scalar(1), Scalar(1), Scalar(0)}};  // x = y
    std::array<Scalar, 6> params{};
};

/// Columns P1..P6 = direction + t * apex (two points per line) and P7 = apex.
/// Validated: nonbases exactly {127, 347, 567}.
PointConfig build_pencil(const PencilSpec& spec);
PointConfig build_pencil(const std::array<Scalar, 6>& params);

extern const std::vector<std::vector<int>> kPencilNonbases;

// ---------------------------------------------------------------------------
// Pascal configuration (9 points, rank 3) and its n-point generalization.
// ---------------------------------------------------------------------------

/// P1..P6 on the conic, P7 = 12^45, P8 = 23^56, P9 = 34^61.
/// Validated: nonbases exactly the seven Pascal triples.
PointConfig build_pascal(const std::array<Scalar, 6>& t);

extern const std::vector<std::vector<int>> kPascalNonbases;

struct MorePointsConfig {
    PointConfig config;
    int n_original = 0;
    int q = 0; // deduplicated auxiliary count
    /// For each i in 6..n: config labels of 12^45, 23^5i, 34^i1.
    std::vector<std::array<int, 3>> aux_labels;
    [[nodiscard]] std::vector<std::vector<int>> expected_nonbases() const;
};

/// n >= 6 conic points followed by the deduplicated auxiliary intersections;
/// q = 2(n-5)+1 for generic parameters.
MorePointsConfig build_more_points(const std::vector<Scalar>& t);

// ---------------------------------------------------------------------------
// Caminata-Schaffler rational-normal-curve configurations (rank d+1).
// ---------------------------------------------------------------------------

struct CsConfig {
    int d = 0;
    PointConfig config;
    int q = 0;
    std::vector<std::vector<int>> lambdas;   // 6-subsets in lexicographic order
    std::vector<GcExpression> expressions;   // one incidence expression per lambda
    std::vector<std::array<int, 3>> aux_labels; // per lambda, dedup-translated
};

/// d+4 moment-curve points plus the deduplicated line-hyperplane meets, with
/// the incidence expression for every 6-subset. Validated against the generic
/// matroid of the construction (two fixed internal reference draws).
CsConfig build_caminata_schaffler(int d, const std::vector<Scalar>& t);

// ---------------------------------------------------------------------------
// Cayley-Bacharach k x k grids (rank 3).
// ---------------------------------------------------------------------------

/// Which construction line carries which config labels.
struct IncidenceTag {
    std::vector<int> base_line;          // labels on L, i.e. 1..k
    std::vector<std::vector<int>> ell;   // ell[i]: labels on l_{i+1}
    std::vector<std::vector<int>> em;    // em[j]: labels on m_{j+1}
    std::vector<int> residual;           // the k^2-k off-L labels
};

struct CbGrid {
    int k = 0;
    PointConfig config;
    IncidenceTag incidence;
    [[nodiscard]] std::vector<std::vector<int>> expected_nonbases() const;
};

struct CbGridSpec {
    int k = 3;
    std::vector<Scalar> base_positions; // x-coordinates of P_i on the line y=0
    std::vector<Scalar> ell_slopes;     // slope of l_i through P_i
    std::vector<Scalar> em_slopes;      // slope of m_i through P_i
};

/// Base points P_i = (b_i, 0, 1); grid point l_i ^ m_j for all i, j. Slopes
/// must be nonzero (L itself has slope 0) and pairwise non-parallel across
/// the two families. Validated: the only collinear triples lie on L, the
/// l_i and the m_j.
CbGrid build_cb_grid(const CbGridSpec& spec);
CbGrid build_cb_grid(int k); // canonical positions 0..k-1, slopes i and -i

} // namespace gcmv
