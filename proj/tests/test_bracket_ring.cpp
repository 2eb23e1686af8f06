#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcmv/bracket_polynomial.hpp"
#include "gcmv/coord_polynomial.hpp"
#include "gcmv/errors.hpp"
#include "support.hpp"

#include <algorithm>

using namespace gcmv;
using test::Rng;

namespace {

Bracket br(std::initializer_list<int> labels) { return Bracket{std::vector<int>(labels)}; }

BracketPolynomial mono(int rank, std::initializer_list<std::initializer_list<int>> brackets,
                       int coeff = 1) {
    std::vector<Bracket> bs;
    for (auto l : brackets) bs.push_back(br(l));
    std::sort(bs.begin(), bs.end());
    BracketPolynomial p(rank);
    p.add_term(bs, Scalar(coeff));
    return p;
}

} // namespace

TEST_CASE("normalize_bracket: signs, zero marker, errors") {
    std::vector<int> raw{1, 3, 2};
    auto n = normalize_bracket(3, raw);
    REQUIRE(n.has_value());
    CHECK(n->first == -1);
    CHECK(n->second == br({1, 2, 3}));

    raw = {1, 1, 2};
    CHECK(!normalize_bracket(3, raw).has_value());

    raw = {7, 4, 8};
    n = normalize_bracket(3, raw);
    REQUIRE(n.has_value());
    CHECK(n->first == -1);
    CHECK(n->second == br({4, 7, 8}));

    raw = {0, 1, 2};
    CHECK_THROWS_AS((void)normalize_bracket(3, raw), LabelError);
    raw = {1, 2};
    CHECK_THROWS_AS((void)normalize_bracket(3, raw), DimensionError);
}

TEST_CASE("normalize_bracket matches permutation parity exhaustively for r=3") {
    int base[3] = {2, 5, 9};
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int parity[6] = {1, -1, -1, 1, 1, -1};
    for (int i = 0; i < 6; ++i) {
        std::vector<int> raw{base[perms[i][0]], base[perms[i][1]], base[perms[i][2]]};
        auto n = normalize_bracket(3, raw);
        REQUIRE(n.has_value());
        CHECK(n->first == parity[i]);
        CHECK(n->second == br({2, 5, 9}));
    }
}

TEST_CASE("evaluate: zero column kills a bracket; evaluate is a ring homomorphism") {
    Rng rng(21);
    PointConfig c = rng.config(3, 6);
    c.zero_column(3);
    CHECK(evaluate(br({1, 2, 3}), c).is_zero());

    for (int iter = 0; iter < 30; ++iter) {
        PointConfig cfg = rng.config(3, 6);
        BracketPolynomial p = mono(3, {{1, 2, 3}}, rng.int_in(-3, 3)) +
                              mono(3, {{1, 4, 5}, {2, 3, 6}}, rng.int_in(-3, 3));
        BracketPolynomial q = mono(3, {{2, 4, 6}}, rng.int_in(-3, 3)) +
                              mono(3, {{1, 3, 5}}, rng.int_in(-3, 3));
        CHECK(evaluate(p * q, cfg) == evaluate(p, cfg) * evaluate(q, cfg));
        CHECK(evaluate(p + q, cfg) == evaluate(p, cfg) + evaluate(q, cfg));
    }
}

TEST_CASE("evaluate rejects out-of-range labels and rank mismatch") {
    Rng rng(22);
    PointConfig c = rng.config(3, 5);
    CHECK_THROWS_AS(evaluate(br({1, 2, 6}), c), LabelError);
    CHECK_THROWS_AS(evaluate(mono(4, {{1, 2, 3, 4}}), c), DimensionError);
}

TEST_CASE("gp_relation: shape and vanishing") {
    BracketPolynomial g = gp_relation(1, 2, 3, 4, 5);
    CHECK(g.term_count() == 3);
    // Ascending labels keep every normalization sign positive, so the
    // coefficients are +1, -1, +1 on [123][145], [124][135], [125][134].
    auto terms = g.terms();
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].brackets == std::vector<Bracket>{br({1, 2, 3}), br({1, 4, 5})});
    CHECK(terms[0].coeff == Scalar(1));
    CHECK(terms[1].brackets == std::vector<Bracket>{br({1, 2, 4}), br({1, 3, 5})});
    CHECK(terms[1].coeff == Scalar(-1));
    CHECK(terms[2].brackets == std::vector<Bracket>{br({1, 2, 5}), br({1, 3, 4})});
    CHECK(terms[2].coeff == Scalar(1));

    Rng rng(23);
    for (int iter = 0; iter < 100; ++iter) {
        PointConfig c = rng.config(3, 5);
        CHECK(evaluate(g, c).is_zero());
    }
    CHECK_THROWS_AS(gp_relation(1, 2, 3, 4, 1), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic: ring identities and cancellation") {
    Rng rng(24);
    BracketPolynomial p = mono(3, {{1, 2, 3}}, 2) + mono(3, {{1, 4, 5}, {2, 3, 6}}, -3);
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).is_zero());

    BracketPolynomial prod = mono(3, {{1, 2, 3}}) * mono(3, {{4, 5, 6}});
    CHECK(prod == mono(3, {{1, 2, 3}, {4, 5, 6}}));
    CHECK(prod.term_count() == 1);

    BracketPolynomial q = mono(3, {{2, 4, 6}}, 5);
    CHECK(p * q == q * p);
    CHECK((p + q) * q == p * q + q * q);

    CHECK_THROWS_AS(p * mono(4, {{1, 2, 3, 4}}), DimensionError);
    CHECK((p * Scalar(0)).is_zero());
}

TEST_CASE("telescoping identity of the pencil saturation argument") {
    auto m = [](std::initializer_list<int> a, std::initializer_list<int> b) {
        return mono(3, {a, b});
    };
    BracketPolynomial a = m({1, 2, 3}, {2, 4, 7});
    BracketPolynomial b = m({1, 2, 4}, {2, 3, 7});
    BracketPolynomial c = m({2, 3, 7}, {4, 6, 7});
    BracketPolynomial d = m({3, 6, 7}, {2, 4, 7});
    BracketPolynomial e = m({4, 5, 6}, {3, 6, 7});
    BracketPolynomial f2 = m({3, 5, 6}, {4, 6, 7});
    BracketPolynomial F = m({1, 2, 3}, {4, 5, 6}) - m({1, 2, 4}, {3, 5, 6});
    BracketPolynomial lhs = (a - b) * c * e + (c - d) * b * e + (e - f2) * b * d;
    BracketPolynomial rhs =
        mono(3, {{2, 3, 7}, {3, 6, 7}, {2, 4, 7}, {4, 6, 7}}) * F;
    CHECK(lhs == rhs);
}

TEST_CASE("text format: pinned form and round trips") {
    BracketPolynomial F = mono(3, {{1, 2, 3}, {4, 5, 6}}) - mono(3, {{1, 2, 4}, {3, 5, 6}});
    CHECK(F.text() == "+ 1 [123][456] - 1 [124][356]");
    CHECK(BracketPolynomial::parse_text(3, F.text()) == F);
    CHECK(BracketPolynomial(3).text() == "0");
    CHECK(BracketPolynomial::parse_text(3, "0").is_zero());

    // Unsorted input labels pick up the permutation sign while parsing.
    CHECK(BracketPolynomial::parse_text(3, "+ 1 [132][456]") ==
          mono(3, {{1, 2, 3}, {4, 5, 6}}, -1));

    // Wide labels are space-separated.
    BracketPolynomial wide = mono(3, {{2, 4, 11}}, 7) + mono(3, {{1, 2, 3}}, -2);
    CHECK(wide.text() == "- 2 [123] + 7 [2 4 11]");
    CHECK(BracketPolynomial::parse_text(3, wide.text()) == wide);

    Rng rng(25);
    for (int iter = 0; iter < 40; ++iter) {
        BracketPolynomial p(3);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> l1{rng.int_in(1, 9), rng.int_in(1, 9), rng.int_in(1, 9)};
            auto n1 = normalize_bracket(3, l1);
            if (!n1) continue;
            p.add_term({n1->second}, rng.rational(5, 3));
        }
        CHECK(BracketPolynomial::parse_text(3, p.text()) == p);
    }
}

TEST_CASE("generic_expand: single bracket is the symbolic minor") {
    BracketPolynomial b12(2);
    b12.add_term({br({1, 2})}, Scalar(1));
    CoordPolynomial g = generic_expand(b12, 2);
    CoordPolynomial expected(2, 2);
    expected.add_term({1, 0, 0, 1}, Scalar(1));  // x[1][1] x[2][2]
    expected.add_term({0, 1, 1, 0}, Scalar(-1)); // x[1][2] x[2][1]
    CHECK(g == expected);
}

TEST_CASE("generic_expand kills exactly the Plücker relations") {
    CHECK(generic_expand(gp_relation(1, 2, 3, 4, 5), 5).is_zero());
    CHECK(generic_expand(gp_relation(2, 3, 4, 5, 6), 6).is_zero());
    // Not everything dies: F expands to something nonzero.
    BracketPolynomial F = mono(3, {{1, 2, 3}, {4, 5, 6}}) - mono(3, {{1, 2, 4}, {3, 5, 6}});
    CHECK(!generic_expand(F, 6).is_zero());
}

TEST_CASE("equal/proportional mod Plücker") {
    BracketPolynomial p = mono(3, {{1, 2, 3}, {1, 4, 5}}) - mono(3, {{1, 2, 4}, {1, 3, 5}});
    CHECK(equal_mod_plucker(p, p));
    // Three-term relation rearranged: [123][145]-[124][135] = -[134][125].
    BracketPolynomial q = mono(3, {{1, 2, 5}, {1, 3, 4}}, -1);
    CHECK(equal_mod_plucker(p, q));
    CHECK(!equal_mod_plucker(p, -q));

    auto ratio = proportional_mod_plucker(p, -q);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == Scalar(-1));

    auto none = proportional_mod_plucker(p, mono(3, {{1, 2, 3}, {4, 5, 6}}));
    CHECK(!none.has_value());

    // Both sides in the ideal: no unique factor.
    CHECK(!proportional_mod_plucker(gp_relation(1, 2, 3, 4, 5), gp_relation(1, 2, 3, 4, 5))
               .has_value());
}

TEST_CASE("generic_expand is a ring homomorphism") {
    Rng rng(26);
    BracketPolynomial p = mono(3, {{1, 2, 3}}, 2) - mono(3, {{2, 4, 5}}, 1);
    BracketPolynomial q = mono(3, {{1, 4, 5}}) + mono(3, {{3, 4, 5}}, 3);
    CHECK(generic_expand(p * q, 5) == generic_expand(p, 5) * generic_expand(q, 5));
    CHECK(generic_expand(p + q, 5) == generic_expand(p, 5) + generic_expand(q, 5));
}
