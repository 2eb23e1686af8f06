#include "gcmv/symbolic.hpp"

#include "gcmv/errors.hpp"
#include "gcmv/subsets.hpp"

#include <algorithm>

namespace gcmv {

FormalExtensor FormalExtensor::atom(int r, int label) {
    if (label < 1) throw LabelError("atom label must be positive");
    FormalExtensor e(r, 1);
    e.add_term({label}, BracketPolynomial::constant(r, Scalar(1)));
    return e;
}

void FormalExtensor::add_term(std::vector<int> word, const BracketPolynomial& coeff) {
    if (static_cast<int>(word.size()) != step_)
        throw DimensionError("FormalExtensor: word length differs from step");
    if (coeff.is_zero()) return;
    int sign = sort_with_sign(word);
    if (sign == 0) return; // repeated symbol annihilates
    BracketPolynomial c = sign < 0 ? -coeff : coeff;
    auto [it, inserted] = terms_.try_emplace(std::move(word), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BracketPolynomial FormalExtensor::as_bracket_polynomial() const {
    BracketPolynomial out(r_);
    if (terms_.empty()) return out;
    if (step_ == 0) return terms_.begin()->second;
    if (step_ != r_)
        throw DimensionError("as_bracket_polynomial: step " + std::to_string(step_) +
                             " is not 0 or the ambient rank");
    for (const auto& [word, coeff] : terms_) {
        // Words are sorted and repeat-free, so they are brackets as-is.
        out += coeff * BracketPolynomial::single(r_, Bracket{word});
    }
    return out;
}

FormalExtensor symbolic_join(const FormalExtensor& a, const FormalExtensor& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw DimensionError("symbolic_join: ambient ranks differ");
    const int r = a.ambient_rank();
    const int step = a.step() + b.step();
    FormalExtensor out(r, step);
    if (step > r) return out; // identically zero beyond top step
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            std::vector<int> word = wa;
            word.insert(word.end(), wb.begin(), wb.end());
            out.add_term(std::move(word), ca * cb);
        }
    return out;
}

FormalExtensor symbolic_meet(const FormalExtensor& a, const FormalExtensor& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw DimensionError("symbolic_meet: ambient ranks differ");
    const int r = a.ambient_rank();
    const int k = a.step(), l = b.step();
    if (k + l < r) return FormalExtensor(r, 0);
    const int s = k + l - r;
    const int head = r - l;
    FormalExtensor out(r, s);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            for (const auto& pick : k_subsets(k, head)) {
                std::vector<int> perm;
                std::vector<bool> picked(static_cast<std::size_t>(k), false);
                std::vector<int> bracket_labels;
                for (int p : pick) {
                    picked[static_cast<std::size_t>(p - 1)] = true;
                    perm.push_back(p - 1);
                    bracket_labels.push_back(wa[static_cast<std::size_t>(p - 1)]);
                }
                std::vector<int> tail;
                for (int i = 0; i < k; ++i)
                    if (!picked[static_cast<std::size_t>(i)]) {
                        perm.push_back(i);
                        tail.push_back(wa[static_cast<std::size_t>(i)]);
                    }
                bracket_labels.insert(bracket_labels.end(), wb.begin(), wb.end());
                auto norm = normalize_bracket(r, bracket_labels);
                if (!norm) continue; // repeated symbol
                int sign = permutation_sign(perm) * norm->first;
                BracketPolynomial coeff =
                    ca * cb * BracketPolynomial::single(r, norm->second, Scalar(sign));
                out.add_term(tail, coeff);
            }
        }
    return out;
}

FormalExtensor expand_symbolic(const GcExpression& e, int r) {
    switch (e.kind()) {
        case GcExpression::Kind::atom:
            return FormalExtensor::atom(r, e.label());
        case GcExpression::Kind::join:
            return symbolic_join(expand_symbolic(e.left(), r), expand_symbolic(e.right(), r));
        case GcExpression::Kind::meet:
            return symbolic_meet(expand_symbolic(e.left(), r), expand_symbolic(e.right(), r));
    }
    throw std::logic_error("expand_symbolic: bad expression kind");
}

BracketPolynomial expand_to_brackets(const GcExpression& e, int r) {
    return expand_symbolic(e, r).as_bracket_polynomial();
}

Extensor eval_numeric(const GcExpression& e, const PointConfig& c) {
    switch (e.kind()) {
        case GcExpression::Kind::atom:
            return Extensor(c.r, {c.column(e.label())});
        case GcExpression::Kind::join:
            return join(eval_numeric(e.left(), c), eval_numeric(e.right(), c));
        case GcExpression::Kind::meet:
            return meet(eval_numeric(e.left(), c), eval_numeric(e.right(), c));
    }
    throw std::logic_error("eval_numeric: bad expression kind");
}

} // namespace gcmv
