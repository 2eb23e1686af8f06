#include "gcmv/extensor.hpp"

#include "gcmv/errors.hpp"
#include "gcmv/rat_matrix.hpp"
#include "gcmv/subsets.hpp"

#include <stdexcept>

namespace gcmv {

namespace {

// Wedge coordinates of a vector list: the k x k minors over sorted
// k-subsets of rows, in lexicographic order.
std::vector<Scalar> wedge_coordinates(int r, const std::vector<std::vector<Scalar>>& vectors) {
    const int k = static_cast<int>(vectors.size());
    if (k > r) return {};
    std::vector<Scalar> coords;
    coords.reserve(binomial(r, k));
    for (const auto& rows : k_subsets(r, k)) {
        RatMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    vectors[static_cast<std::size_t>(j)]
                           [static_cast<std::size_t>(rows[static_cast<std::size_t>(i)] - 1)];
        coords.push_back(det(m));
    }
    return coords;
}

} // namespace

Extensor::Extensor(int r, std::vector<std::vector<Scalar>> vectors)
    : r_(r), step_(static_cast<int>(vectors.size())), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
        if (v.size() != static_cast<std::size_t>(r))
            throw DimensionError("Extensor: vector length differs from ambient rank");
    plucker_ = wedge_coordinates(r_, vectors_);
}

Extensor Extensor::scalar(int r, const Scalar& value) {
    Extensor e;
    e.r_ = r;
    e.step_ = 0;
    e.plucker_ = {value};
    return e;
}

Extensor Extensor::zero(int r, int step) {
    Extensor e;
    e.r_ = r;
    e.step_ = step;
    if (step <= r) e.plucker_.assign(binomial(r, step), Scalar(0));
    e.vectors_.assign(static_cast<std::size_t>(step),
                      std::vector<Scalar>(static_cast<std::size_t>(r), Scalar(0)));
    if (step == 0) e.vectors_.clear();
    return e;
}

bool Extensor::is_zero() const {
    for (const auto& c : plucker_)
        if (!c.is_zero()) return false;
    return true;
}

const Scalar& Extensor::scalar_value() const {
    if (step_ != 0) throw DimensionError("scalar_value: extensor step is not 0");
    return plucker_[0];
}

Extensor Extensor::scaled(const Scalar& c) const {
    if (step_ == 0) return scalar(r_, plucker_[0] * c);
    if (c.is_zero() || is_zero()) return zero(r_, step_);
    Extensor e = *this;
    for (auto& x : e.vectors_[0]) x *= c;
    for (auto& p : e.plucker_) p *= c;
    return e;
}

Extensor Extensor::from_coordinates(int r, int step, const std::vector<Scalar>& coords) {
    if (coords.size() != binomial(r, step))
        throw DimensionError("from_coordinates: wrong coordinate count");
    bool zero_coords = true;
    for (const auto& c : coords) zero_coords &= c.is_zero();
    if (zero_coords) return zero(r, step);
    if (step == 0) return scalar(r, coords[0]);
    if (step == r) {
        // c * e1 ^ e2 ^ ... ^ er
        std::vector<std::vector<Scalar>> vs(static_cast<std::size_t>(r),
                                            std::vector<Scalar>(static_cast<std::size_t>(r)));
        for (int i = 0; i < r; ++i) vs[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar(1);
        for (auto& x : vs[0]) x *= coords[0];
        return Extensor(r, std::move(vs));
    }

    // The support subspace of a decomposable E is the kernel of x -> x ^ E.
    auto supersets = k_subsets(r, step + 1);
    auto subsets = k_subsets(r, step);
    RatMatrix a(supersets.size(), static_cast<std::size_t>(r));
    for (std::size_t row = 0; row < supersets.size(); ++row) {
        const auto& t = supersets[row];
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
            std::vector<int> rest;
            rest.reserve(t.size() - 1);
            for (std::size_t j = 0; j < t.size(); ++j)
                if (j != idx) rest.push_back(t[j]);
            Scalar v = coords[subset_rank(rest, r)];
            if (idx % 2 == 1) v = -v;
            a.at(row, static_cast<std::size_t>(t[idx] - 1)) = v;
        }
    }
    auto kernel = nullspace(a);
    if (static_cast<int>(kernel.size()) != step)
        throw std::logic_error("from_coordinates: coordinates are not decomposable");
    Extensor e(r, std::move(kernel));
    auto ratio = proportionality(coords, e.plucker_);
    if (!ratio) throw std::logic_error("from_coordinates: coordinates are not decomposable");
    return e.scaled(*ratio);
}

Extensor join(const Extensor& a, const Extensor& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw DimensionError("join: ambient ranks differ");
    const int r = a.ambient_rank();
    if (a.step() == 0) return b.scaled(a.scalar_value());
    if (b.step() == 0) return a.scaled(b.scalar_value());
    const int step = a.step() + b.step();
    if (step > r || a.is_zero() || b.is_zero()) return Extensor::zero(r, step);
    std::vector<std::vector<Scalar>> vs = a.vectors();
    vs.insert(vs.end(), b.vectors().begin(), b.vectors().end());
    return Extensor(r, std::move(vs));
}

Extensor meet(const Extensor& a, const Extensor& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw DimensionError("meet: ambient ranks differ");
    const int r = a.ambient_rank();
    const int k = a.step(), l = b.step();
    if (k > r || l > r || a.is_zero() || b.is_zero())
        return Extensor::zero(r, std::max(k + l - r, 0));
    if (k + l < r) return Extensor::zero(r, 0);
    const int s = k + l - r;   // result step
    const int head = r - l;    // vectors of a moved into the bracket

    std::vector<Scalar> coords(binomial(r, s), Scalar(0));
    std::vector<int> positions(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) positions[static_cast<std::size_t>(i)] = i;

    for (const auto& pick : k_subsets(k, head)) {
        // pick is 1-based over a's vector positions
        std::vector<int> perm;
        std::vector<bool> in_pick(static_cast<std::size_t>(k), false);
        for (int p : pick) in_pick[static_cast<std::size_t>(p - 1)] = true;
        for (int p : pick) perm.push_back(p - 1);
        std::vector<std::vector<Scalar>> tail_vectors;
        for (int i = 0; i < k; ++i)
            if (!in_pick[static_cast<std::size_t>(i)]) {
                perm.push_back(i);
                tail_vectors.push_back(a.vectors()[static_cast<std::size_t>(i)]);
            }
        int sign = permutation_sign(perm);

        RatMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
        std::size_t col = 0;
        for (int p : pick) {
            for (int i = 0; i < r; ++i)
                m.at(static_cast<std::size_t>(i), col) =
                    a.vectors()[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(i)];
            ++col;
        }
        for (const auto& w : b.vectors()) {
            for (int i = 0; i < r; ++i) m.at(static_cast<std::size_t>(i), col) = w[static_cast<std::size_t>(i)];
            ++col;
        }
        Scalar bracket = det(m);
        if (bracket.is_zero()) continue;
        Scalar factor = Scalar(sign) * bracket;
        std::vector<Scalar> partial = Extensor(r, tail_vectors).plucker();
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += factor * partial[i];
    }
    return Extensor::from_coordinates(r, s, coords);
}

std::optional<Scalar> proportionality(const std::vector<Scalar>& a,
                                      const std::vector<Scalar>& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::size_t i0 = b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) {
            i0 = i;
            break;
        }
    if (i0 == b.size()) return std::nullopt;
    Scalar c = a[i0] / b[i0];
    if (c.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != c * b[i]) return std::nullopt;
    return c;
}

} // namespace gcmv
