#pragma once

#include "gcmv/scalar.hpp"

#include <optional>
#include <vector>

namespace gcmv {

/// Decomposable antisymmetric tensor of step k in a rank-r exterior algebra.
/// Carries both the spanning vectors (the shuffle formula acts on those) and
/// the derived Plücker coordinates, indexed by sorted k-subsets of {1..r} in
/// lexicographic order. The extensor is zero iff all coordinates are zero,
/// which happens iff the vectors are dependent. Steps above r are legal and
/// always zero (their coordinate list is empty).
class Extensor {
public:
    Extensor() : r_(0), step_(0) {}

    /// Wedge of the given vectors (each of length r).
    Extensor(int r, std::vector<std::vector<Scalar>> vectors);

    /// Step-0 extensor, i.e. a scalar.
    static Extensor scalar(int r, const Scalar& value);

    static Extensor zero(int r, int step);

    /// Reconstructs the decomposable vector form from coordinates known to be
    /// decomposable (e.g. a shuffle-formula sum). Throws std::logic_error if
    /// the coordinates are not decomposable.
    static Extensor from_coordinates(int r, int step, const std::vector<Scalar>& coords);

    [[nodiscard]] int ambient_rank() const { return r_; }
    [[nodiscard]] int step() const { return step_; }
    [[nodiscard]] const std::vector<std::vector<Scalar>>& vectors() const { return vectors_; }
    [[nodiscard]] const std::vector<Scalar>& plucker() const { return plucker_; }
    [[nodiscard]] bool is_zero() const;

    /// Value of a step-0 extensor.
    [[nodiscard]] const Scalar& scalar_value() const;

    [[nodiscard]] Extensor scaled(const Scalar& c) const;

private:
    int r_, step_;
    std::vector<std::vector<Scalar>> vectors_;
    std::vector<Scalar> plucker_;
};

/// Exterior product. Zero when the combined vectors are dependent or the
/// combined step exceeds the ambient rank. Throws on ambient rank mismatch.
Extensor join(const Extensor& a, const Extensor& b);

/// Shuffle-formula meet; zero when the steps sum below the ambient rank,
/// otherwise an extensor of step a.step + b.step - r.
Extensor meet(const Extensor& a, const Extensor& b);

/// The unique nonzero c with a = c*b coordinate-wise, if any.
std::optional<Scalar> proportionality(const std::vector<Scalar>& a,
                                      const std::vector<Scalar>& b);

} // namespace gcmv
