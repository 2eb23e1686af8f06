#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcmv/coord_polynomial.hpp"
#include "gcmv/errors.hpp"
#include "gcmv/expression.hpp"
#include "gcmv/extensor.hpp"
#include "gcmv/symbolic.hpp"
#include "support.hpp"

using namespace gcmv;
using test::Rng;

namespace {

Extensor pt(int r, std::initializer_list<int> coords) {
    std::vector<Scalar> v;
    for (int c : coords) v.push_back(Scalar(c));
    return Extensor(r, {v});
}

std::vector<Scalar> cross(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BracketPolynomial brmono(int rank, std::initializer_list<std::initializer_list<int>> brackets,
                         int coeff = 1) {
    std::vector<Bracket> bs;
    for (auto l : brackets) bs.push_back(Bracket{std::vector<int>(l)});
    std::sort(bs.begin(), bs.end());
    BracketPolynomial p(rank);
    p.add_term(bs, Scalar(coeff));
    return p;
}

} // namespace

TEST_CASE("parser: paper expressions and the documented grammar") {
    GcExpression e = parse_expression("(34^12)v56");
    CHECK(e.kind() == GcExpression::Kind::join);
    CHECK(e.left().kind() == GcExpression::Kind::meet);
    CHECK(e.left().left().kind() == GcExpression::Kind::join);
    CHECK(e.left().left().left().label() == 3);
    CHECK(e.left().left().right().label() == 4);
    CHECK(e.left().right().left().label() == 1);
    CHECK(e.right().right().label() == 6);

    GcExpression j = parse_expression("12");
    CHECK(j.kind() == GcExpression::Kind::join);
    CHECK(j.left().label() == 1);
    CHECK(j.right().label() == 2);

    // Join is left-associative: both spellings give the same tree.
    GcExpression a = parse_expression("(12^45)v(23^56)v(34^61)");
    GcExpression b = parse_expression("((12^45)v(23^56))v(34^61)");
    CHECK(a.str() == b.str());
    CHECK(a.left().kind() == GcExpression::Kind::join);
    CHECK(a.right().kind() == GcExpression::Kind::meet);

    // Multi-digit atoms use '#'; whitespace separates factors.
    GcExpression wide = parse_expression("#12 v 3");
    CHECK(wide.left().label() == 12);
    CHECK(wide.right().label() == 3);
    GcExpression juxt = parse_expression("#10 1");
    CHECK(juxt.kind() == GcExpression::Kind::join);
    CHECK(juxt.left().label() == 10);
    CHECK(juxt.right().label() == 1);
}

TEST_CASE("parser: rejects ambiguous or malformed input with a position") {
    CHECK_THROWS_AS(parse_expression("12^34v56"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("(12"), ParseError);
    CHECK_THROWS_AS(parse_expression("12)"), ParseError);
    CHECK_THROWS_AS(parse_expression("12^^34"), ParseError);
    CHECK_THROWS_AS(parse_expression("102"), ParseError); // '0' is not a label
    CHECK_THROWS_AS(parse_expression("#"), ParseError);
    try {
        parse_expression("12^34v56");
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("parenthesize") != std::string::npos);
    }
    // Same-operator chains stay legal.
    CHECK(parse_expression("1v2v3").kind() == GcExpression::Kind::join);
    CHECK(parse_expression("(123)^(456)^(124)").kind() == GcExpression::Kind::meet);
}

TEST_CASE("expression str() round-trips through the parser") {
    for (const char* src :
         {"(34^12)v56", "(12^45)v(23^56)v(34^61)", "7v(23^56)v(34^61)", "7v8v(34^61)",
          "#12v(3 4^56)", "1v2v3v4"}) {
        GcExpression e = parse_expression(src);
        CHECK(parse_expression(e.str()).str() == e.str());
    }
}

TEST_CASE("join: dependence, step-r bracket identification, plucker coordinates") {
    Extensor e1 = pt(3, {1, 0, 0});
    CHECK(join(e1, e1).is_zero());

    // Wedge of three independent vectors: the single coordinate is their det.
    Extensor tri = join(join(pt(3, {1, 0, 0}), pt(3, {1, 1, 1})), pt(3, {0, 0, 1}));
    CHECK(tri.step() == 3);
    REQUIRE(tri.plucker().size() == 1);
    CHECK(tri.plucker()[0] == Scalar(1));

    Extensor line = join(pt(3, {1, 0, 0}), pt(3, {0, 1, 0}));
    CHECK(line.step() == 2);
    REQUIRE(line.plucker().size() == 3);
    CHECK(line.plucker()[0] == Scalar(1)); // {1,2}
    CHECK(line.plucker()[1] == Scalar(0)); // {1,3}
    CHECK(line.plucker()[2] == Scalar(0)); // {2,3}

    // Step above the ambient rank is identically zero.
    CHECK(join(line, line).is_zero());
    CHECK_THROWS_AS(join(pt(3, {1, 0, 0}), pt(4, {1, 0, 0, 0})), DimensionError);
}

TEST_CASE("meet: grade rule and the cross-product oracle in the plane") {
    Extensor p1 = pt(3, {1, 0, 0}), p2 = pt(3, {0, 1, 0});
    Extensor p3 = pt(3, {1, 1, 1}), p4 = pt(3, {0, 0, 1});
    CHECK(meet(p1, p2).is_zero()); // steps sum below the rank

    Extensor m = meet(join(p3, p4), join(p1, p2));
    CHECK(m.step() == 1);
    auto expected = cross(cross(p3.vectors()[0], p4.vectors()[0]),
                          cross(p1.vectors()[0], p2.vectors()[0]));
    // Line 34 x line 12 = (-1, -1, 0) up to scale.
    CHECK(expected[0] == Scalar(-1));
    CHECK(expected[1] == Scalar(-1));
    CHECK(expected[2] == Scalar(0));
    auto ratio = proportionality(m.plucker(), expected);
    REQUIRE(ratio.has_value());

    // Formal counterpart matches the [312]4 - [412]3 pattern: the meet lies
    // on both lines.
    Rng rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        PointConfig c = rng.config(3, 4);
        Extensor l1 = join(Extensor(3, {c.column(1)}), Extensor(3, {c.column(2)}));
        Extensor l2 = join(Extensor(3, {c.column(3)}), Extensor(3, {c.column(4)}));
        Extensor x = meet(l1, l2);
        if (x.is_zero()) continue;
        auto cov1 = cross(c.column(1), c.column(2));
        auto cov2 = cross(c.column(3), c.column(4));
        Scalar dot1(0), dot2(0);
        for (int i = 0; i < 3; ++i) {
            dot1 += cov1[static_cast<std::size_t>(i)] * x.plucker()[static_cast<std::size_t>(i)];
            dot2 += cov2[static_cast<std::size_t>(i)] * x.plucker()[static_cast<std::size_t>(i)];
        }
        CHECK(dot1.is_zero());
        CHECK(dot2.is_zero());
    }
}

TEST_CASE("meet grade rule on random extensors") {
    Rng rng(32);
    for (int iter = 0; iter < 60; ++iter) {
        int r = rng.int_in(2, 4);
        int k = rng.int_in(1, r);
        int l = rng.int_in(1, r);
        std::vector<std::vector<Scalar>> va, vb;
        for (int i = 0; i < k; ++i) {
            std::vector<Scalar> v;
            for (int j = 0; j < r; ++j) v.push_back(rng.rational(4, 2));
            va.push_back(v);
        }
        for (int i = 0; i < l; ++i) {
            std::vector<Scalar> v;
            for (int j = 0; j < r; ++j) v.push_back(rng.rational(4, 2));
            vb.push_back(v);
        }
        Extensor a(r, va), b(r, vb);
        Extensor m = meet(a, b);
        if (k + l < r) {
            CHECK(m.is_zero());
        } else {
            CHECK(m.step() == k + l - r);
        }
    }
}

TEST_CASE("expand_symbolic: F from the pencil factorization (pinned)") {
    BracketPolynomial F =
        brmono(3, {{1, 2, 3}, {4, 5, 6}}) - brmono(3, {{1, 2, 4}, {3, 5, 6}});
    CHECK(expand_to_brackets(parse_expression("(34^12)v56"), 3) == F);
}

TEST_CASE("expand_symbolic: the cubic g7 (pinned, with the re-derived third term)") {
    BracketPolynomial g7 = brmono(3, {{2, 5, 6}, {1, 3, 6}, {3, 4, 7}}) -
                           brmono(3, {{3, 5, 6}, {1, 3, 6}, {2, 4, 7}}) +
                           brmono(3, {{3, 5, 6}, {1, 4, 6}, {2, 3, 7}});
    CHECK(expand_to_brackets(parse_expression("7v(23^56)v(34^61)"), 3) == g7);
}

TEST_CASE("expand_symbolic: the quadric h78 (pinned)") {
    BracketPolynomial h78 =
        brmono(3, {{4, 7, 8}, {1, 3, 6}}) - brmono(3, {{1, 4, 6}, {3, 7, 8}});
    CHECK(expand_to_brackets(parse_expression("7v8v(34^61)"), 3) == h78);
}

TEST_CASE("expand_symbolic: Theorem 3.1 expression has 4 surviving terms, ±f mod Plücker") {
    BracketPolynomial raw = expand_to_brackets(parse_expression("(12^45)v(23^56)v(34^61)"), 3);
    CHECK(raw.term_count() == 4);
    BracketPolynomial f = brmono(3, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}) -
                          brmono(3, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}});
    CHECK(raw != f);
    CHECK(raw != -f);
    auto ratio = proportional_mod_plucker(raw, f);
    REQUIRE(ratio.has_value());
    CHECK((*ratio == Scalar(1) || *ratio == Scalar(-1)));
}

TEST_CASE("join antisymmetry on atoms at the symbolic level") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            FormalExtensor ab = expand_symbolic(
                GcExpression::join(GcExpression::atom(a), GcExpression::atom(b)), 3);
            FormalExtensor ba = expand_symbolic(
                GcExpression::join(GcExpression::atom(b), GcExpression::atom(a)), 3);
            if (a == b) {
                CHECK(ab.is_zero());
                continue;
            }
            REQUIRE(ab.terms().size() == 1);
            REQUIRE(ba.terms().size() == 1);
            const auto& [wa, ca] = *ab.terms().begin();
            const auto& [wb, cb] = *ba.terms().begin();
            CHECK(wa == wb);
            CHECK(ca == -cb);
        }
}

TEST_CASE("symbolic/numeric commutation on random configurations") {
    const char* exprs[] = {"(34^12)v56", "(12^45)v(23^56)v(34^61)", "7v(23^56)v(34^61)",
                           "7v8v(34^61)", "(12^45)v8v9"};
    Rng rng(33);
    for (const char* src : exprs) {
        GcExpression e = parse_expression(src);
        BracketPolynomial p = expand_to_brackets(e, 3);
        for (int iter = 0; iter < 25; ++iter) {
            PointConfig c = rng.config(3, 9);
            Extensor num = eval_numeric(e, c);
            REQUIRE(num.step() == 3);
            CHECK(num.plucker()[0] == evaluate(p, c));
        }
    }
}

TEST_CASE("eval_numeric: zero columns as atoms are legal") {
    Rng rng(34);
    PointConfig c = rng.config(3, 9);
    c.zero_column(8);
    Extensor res = eval_numeric(parse_expression("7v8v(34^61)"), c);
    CHECK(res.is_zero());
    CHECK_THROWS_AS(eval_numeric(parse_expression("7v#10"), c), LabelError);
}

TEST_CASE("meet of a line with itself is zero") {
    Extensor line = join(pt(3, {1, 0, 0}), pt(3, {0, 1, 0}));
    CHECK(meet(line, line).is_zero());
}

TEST_CASE("scalar (step-0) extensors act as scalars under join") {
    Extensor c = Extensor::scalar(3, Scalar(5));
    Extensor p = pt(3, {1, 2, 3});
    Extensor scaled = join(c, p);
    CHECK(scaled.step() == 1);
    CHECK(scaled.plucker()[0] == Scalar(5));
    CHECK(scaled.plucker()[1] == Scalar(10));
    CHECK(scaled.plucker()[2] == Scalar(15));
    // Meet with total step r gives a step-0 scalar: the bracket value.
    Extensor l1 = join(pt(3, {1, 0, 0}), pt(3, {0, 1, 0}));
    Extensor q = pt(3, {1, 1, 1});
    Extensor s = meet(l1, join(q, pt(3, {0, 0, 1})));
    CHECK(s.step() == 1);
}
