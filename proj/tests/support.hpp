#pragma once

#include "gcmv/point_config.hpp"
#include "gcmv/rat_matrix.hpp"
#include "gcmv/scalar.hpp"

#include <cstdint>
#include <random>

namespace gcmv::test {

/// Small random rationals for property tests; raw engine output only, so the
/// sequences are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int int_in(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar rational(int max_num = 9, int max_den = 4) {
        return Scalar(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Scalar nonzero_rational(int max_num = 9, int max_den = 4) {
        while (true) {
            Scalar s = rational(max_num, max_den);
            if (!s.is_zero()) return s;
        }
    }

    RatMatrix matrix(std::size_t rows, std::size_t cols, int max_num = 9, int max_den = 4) {
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rational(max_num, max_den);
        return m;
    }

    RatMatrix invertible(std::size_t n) {
        while (true) {
            RatMatrix m = matrix(n, n);
            if (!det(m).is_zero()) return m;
        }
    }

    PointConfig config(int r, int n) {
        PointConfig c(r, n);
        c.mat = matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
        return c;
    }

private:
    std::mt19937_64 eng_;
};

/// Independent determinant oracle: cofactor expansion along the first row.
inline Scalar cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m.at(0, 0);
    Scalar total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cc++) = m.at(i, k);
            }
        }
        Scalar term = m.at(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace gcmv::test
