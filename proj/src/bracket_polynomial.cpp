#include "gcmv/bracket_polynomial.hpp"

#include "gcmv/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace gcmv {

BracketPolynomial BracketPolynomial::constant(int rank, const Scalar& c) {
    BracketPolynomial p(rank);
    p.add_term({}, c);
    return p;
}

BracketPolynomial BracketPolynomial::single(int rank, const Bracket& b, const Scalar& c) {
    if (b.rank() != rank) throw DimensionError("bracket rank differs from polynomial rank");
    BracketPolynomial p(rank);
    p.add_term({b}, c);
    return p;
}

std::vector<BracketMonomial> BracketPolynomial::terms() const {
    std::vector<BracketMonomial> out;
    out.reserve(terms_.size());
    for (const auto& [brs, c] : terms_) out.push_back({c, brs});
    return out;
}

int BracketPolynomial::max_label() const {
    int m = 0;
    for (const auto& [brs, c] : terms_)
        for (const auto& b : brs)
            for (int l : b.labels) m = std::max(m, l);
    return m;
}

void BracketPolynomial::add_term(const std::vector<Bracket>& brackets, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& b : brackets)
        if (b.rank() != rank_) throw DimensionError("bracket rank differs from polynomial rank");
    std::vector<Bracket> key = brackets;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void BracketPolynomial::check_rank(const BracketPolynomial& o) const {
    if (rank_ != o.rank_)
        throw DimensionError("bracket polynomial ranks differ: " + std::to_string(rank_) +
                             " vs " + std::to_string(o.rank_));
}

BracketPolynomial BracketPolynomial::operator-() const {
    BracketPolynomial p(rank_);
    for (const auto& [brs, c] : terms_) p.terms_.emplace(brs, -c);
    return p;
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& o) {
    check_rank(o);
    for (const auto& [brs, c] : o.terms_) add_term(brs, c);
    return *this;
}

BracketPolynomial& BracketPolynomial::operator-=(const BracketPolynomial& o) {
    check_rank(o);
    for (const auto& [brs, c] : o.terms_) add_term(brs, -c);
    return *this;
}

BracketPolynomial& BracketPolynomial::operator*=(const BracketPolynomial& o) {
    check_rank(o);
    BracketPolynomial out(rank_);
    for (const auto& [ba, ca] : terms_)
        for (const auto& [bb, cb] : o.terms_) {
            std::vector<Bracket> merged;
            merged.reserve(ba.size() + bb.size());
            std::merge(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(merged));
            out.add_term(merged, ca * cb);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

BracketPolynomial& BracketPolynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [brs, coeff] : terms_) coeff *= c;
    return *this;
}

std::string BracketPolynomial::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [brs, c] : terms_) {
        os << (first ? "" : " ") << (c.sign() < 0 ? "- " : "+ ");
        Scalar mag = c.sign() < 0 ? -c : c;
        os << mag.str() << " ";
        for (const auto& b : brs) os << b.str();
        first = false;
    }
    return os.str();
}

BracketPolynomial BracketPolynomial::parse_text(int rank, const std::string& text) {
    BracketPolynomial p(rank);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    std::size_t end = text.size();
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (text.substr(i, end - i) == "0") return p;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '[')
            ++i;
        if (start == i) throw ParseError("expected coefficient", i);
        Scalar c = Scalar::from_string(text.substr(start, i - start));
        if (sign < 0) c = -c;
        skip_ws();
        std::vector<Bracket> brackets;
        while (i < text.size() && text[i] == '[') {
            ++i;
            std::vector<int> labels;
            bool spaced = text.find(' ', i) < text.find(']', i);
            while (i < text.size() && text[i] != ']') {
                if (std::isspace(static_cast<unsigned char>(text[i]))) {
                    ++i;
                    continue;
                }
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("expected digit inside bracket", i);
                if (spaced) {
                    std::size_t s = i;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                    labels.push_back(std::stoi(text.substr(s, i - s)));
                } else {
                    labels.push_back(text[i] - '0');
                    ++i;
                }
            }
            if (i >= text.size()) throw ParseError("unterminated bracket", i);
            ++i; // ']'
            auto norm = normalize_bracket(rank, labels);
            if (!norm) throw ParseError("repeated label inside bracket", i);
            if (norm->first < 0) c = -c;
            brackets.push_back(norm->second);
            skip_ws();
        }
        p.add_term(brackets, c);
        first = false;
        skip_ws();
    }
    return p;
}

Scalar evaluate(const Bracket& b, const PointConfig& c) {
    if (b.rank() != c.r)
        throw DimensionError("bracket rank " + std::to_string(b.rank()) +
                             " differs from configuration rank " + std::to_string(c.r));
    std::vector<std::size_t> cols;
    cols.reserve(b.labels.size());
    for (int l : b.labels) {
        c.check_label(l);
        cols.push_back(static_cast<std::size_t>(l - 1));
    }
    return det(c.mat.select_columns(cols));
}

Scalar evaluate(const BracketPolynomial& p, const PointConfig& c) {
    if (p.rank() != c.r)
        throw DimensionError("polynomial rank differs from configuration rank");
    Scalar total(0);
    for (const auto& term : p.terms()) {
        Scalar v = term.coeff;
        for (const auto& b : term.brackets) {
            if (v.is_zero()) break;
            v *= evaluate(b, c);
        }
        total += v;
    }
    return total;
}

BracketPolynomial gp_relation(int l1, int l2, int l3, int l4, int l5) {
    std::array<int, 5> ls{l1, l2, l3, l4, l5};
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (ls[i] == ls[j])
                throw std::invalid_argument("gp_relation: labels must be distinct");
    BracketPolynomial p(3);
    auto term = [&](int a, int b, int c, int d, int e, int f, int sign) {
        std::array<int, 3> first{a, b, c}, second{d, e, f};
        auto n1 = normalize_bracket(3, first);
        auto n2 = normalize_bracket(3, second);
        p.add_term({n1->second, n2->second}, Scalar(sign * n1->first * n2->first));
    };
    term(l1, l2, l3, l1, l4, l5, +1);
    term(l1, l2, l4, l1, l3, l5, -1);
    term(l1, l2, l5, l1, l3, l4, +1);
    return p;
}

} // namespace gcmv
