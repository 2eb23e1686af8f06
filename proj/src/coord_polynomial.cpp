#include "gcmv/coord_polynomial.hpp"

#include "gcmv/errors.hpp"
#include "gcmv/subsets.hpp"

#include <algorithm>

namespace gcmv {

Scalar CoordPolynomial::leading_coefficient() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.begin()->second;
}

void CoordPolynomial::add_term(const std::vector<std::uint16_t>& expo, const Scalar& c) {
    if (c.is_zero()) return;
    if (expo.size() != static_cast<std::size_t>(r_ * n_))
        throw DimensionError("CoordPolynomial: exponent vector has wrong length");
    auto [it, inserted] = terms_.try_emplace(expo, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoordPolynomial CoordPolynomial::operator-() const {
    CoordPolynomial p(r_, n_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

CoordPolynomial& CoordPolynomial::operator+=(const CoordPolynomial& o) {
    if (r_ != o.r_ || n_ != o.n_) throw DimensionError("CoordPolynomial: shape mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CoordPolynomial& CoordPolynomial::operator-=(const CoordPolynomial& o) {
    if (r_ != o.r_ || n_ != o.n_) throw DimensionError("CoordPolynomial: shape mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CoordPolynomial& CoordPolynomial::operator*=(const CoordPolynomial& o) {
    if (r_ != o.r_ || n_ != o.n_) throw DimensionError("CoordPolynomial: shape mismatch");
    CoordPolynomial out(r_, n_);
    std::vector<std::uint16_t> expo(static_cast<std::size_t>(r_ * n_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < expo.size(); ++i)
                expo[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            out.add_term(expo, ca * cb);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

CoordPolynomial& CoordPolynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

// Symbolic determinant of the generic r x r minor on the given columns:
// sum over permutations sigma of sign(sigma) * prod_s x[sigma(s)][lambda_s].
CoordPolynomial symbolic_minor(int r, int n, const std::vector<int>& labels) {
    CoordPolynomial out(r, n);
    std::vector<int> perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint16_t> expo(static_cast<std::size_t>(r * n));
    do {
        std::fill(expo.begin(), expo.end(), 0);
        for (int s = 0; s < r; ++s) {
            int row = perm[static_cast<std::size_t>(s)];
            int col = labels[static_cast<std::size_t>(s)] - 1;
            ++expo[static_cast<std::size_t>(row * n + col)];
        }
        out.add_term(expo, Scalar(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

CoordPolynomial generic_expand(const BracketPolynomial& p, int n) {
    const int r = p.rank();
    if (p.max_label() > n)
        throw LabelError("generic_expand: polynomial uses labels beyond n");
    CoordPolynomial total(r, n);
    for (const auto& term : p.terms()) {
        CoordPolynomial prod(r, n);
        prod.add_term(std::vector<std::uint16_t>(static_cast<std::size_t>(r * n), 0), term.coeff);
        for (const auto& b : term.brackets) prod *= symbolic_minor(r, n, b.labels);
        total += prod;
    }
    return total;
}

bool equal_mod_plucker(const BracketPolynomial& p, const BracketPolynomial& q) {
    if (p.rank() != q.rank()) throw DimensionError("equal_mod_plucker: rank mismatch");
    int n = std::max(p.max_label(), q.max_label());
    n = std::max(n, p.rank());
    return generic_expand(p, n) == generic_expand(q, n);
}

std::optional<Scalar> proportional_mod_plucker(const BracketPolynomial& p,
                                               const BracketPolynomial& q) {
    if (p.rank() != q.rank()) throw DimensionError("proportional_mod_plucker: rank mismatch");
    int n = std::max(p.max_label(), q.max_label());
    n = std::max(n, p.rank());
    CoordPolynomial gp = generic_expand(p, n);
    CoordPolynomial gq = generic_expand(q, n);
    if (gq.is_zero()) return std::nullopt; // no unique factor
    if (gp.is_zero()) return std::nullopt; // factor would be zero
    Scalar c = gp.leading_coefficient() / gq.leading_coefficient();
    gq *= c;
    if (gp == gq) return c;
    return std::nullopt;
}

} // namespace gcmv
