#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qsa/error.hpp"
#include "qsa/pbwd.hpp"
#include "support.hpp"

using namespace qsa;
using qsa::testing::v;
using qsa::testing::x;

namespace {

ParamPoly h() { return ParamPoly::param(0); }
ShuffleElement gen(const Flavor& f, int i, int r) { return ShuffleElement::generator(f, i, r); }

}  // namespace

TEST_CASE("positive roots") {
    auto a2 = positive_roots(Flavor::trig_a(2));
    REQUIRE(a2.size() == 1);
    CHECK(a2[0] == Root{1, 1});
    auto a3 = positive_roots(Flavor::trig_a(3));
    REQUIRE(a3.size() == 3);
    CHECK(a3[0] == Root{1, 1});
    CHECK(a3[1] == Root{1, 2});
    CHECK(a3[2] == Root{2, 2});
    auto s11 = positive_roots(Flavor::trig_super(1, 1));
    REQUIRE(s11.size() == 1);
    CHECK(s11[0].odd);
    for (const auto& r : positive_roots(Flavor::trig_super(2, 2))) CHECK(r.odd == r.contains(2));
    Flavor a5 = Flavor::trig_a(5);
    auto roots = positive_roots(a5);
    for (size_t k = 0; k < roots.size(); ++k) CHECK(root_index(a5, roots[k]) == static_cast<int>(k) + 1);
}

TEST_CASE("degree comparator follows the inverted lexicographic rule") {
    // More copies of an earlier root means a smaller degree vector.
    CHECK(degree_less({2, 0, 0}, {1, 1, 0}));
    CHECK_FALSE(degree_less({1, 1, 0}, {2, 0, 0}));
    CHECK(degree_less({1, 0, 1}, {1, 0, 0}));
    CHECK_FALSE(degree_less({1, 0, 1}, {1, 0, 1}));
    // The all-simple vector of grading (1,1) is the minimum.
    CHECK(degree_less({1, 0, 1}, {0, 1, 0}));
}

TEST_CASE("q_bracket examples") {
    Flavor a3 = Flavor::trig_a(3);
    auto F = gen(a3, 1, 2);
    CHECK(q_bracket(F, ShuffleElement::unit(a3), ParamPoly(1)).is_zero());
    auto b = q_bracket(gen(a3, 1, 0), gen(a3, 2, 0), v());
    CHECK(b.numerator() == x(1, 1) * (ParamPoly(1) - v(2)));
    CHECK(b.denominator() == x(1, 1) - x(2, 1));

    Flavor s11 = Flavor::trig_super(1, 1);
    for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s) {
            auto ar = gen(s11, 1, r), as = gen(s11, 1, s);
            auto anti = q_bracket(ar, as, ParamPoly(1), {true, true});
            CHECK(anti == shuffle_product(ar, as) + shuffle_product(as, ar));
            if (r == s) CHECK(anti == shuffle_product(ar, ar) * ParamPoly(2));
        }
    // Odd generators anticommute at equal modes: their square vanishes.
    CHECK(shuffle_product(gen(s11, 1, 0), gen(s11, 1, 0)).is_zero());
}

TEST_CASE("pbwd elements") {
    Flavor a3 = Flavor::trig_a(3);
    CHECK(pbwd_element(a3, Root{2, 2}, 3) == gen(a3, 2, 3));
    auto e = pbwd_element(a3, Root{1, 2}, 0);
    CHECK(e.numerator() == x(1, 1) * (ParamPoly(1) - v(2)));

    Flavor y3 = Flavor::yang_a(3);
    auto ey = pbwd_element(y3, Root{1, 2}, 0);
    CHECK(ey.numerator() == XPoly(-h()));
    CHECK(pbwd_element(y3, Root{1, 2}, 2).numerator() == x(1, 1, 2) * (-h()));
    CHECK_THROWS_AS(pbwd_element(y3, Root{1, 2}, -1), InvalidInput);
    CHECK_THROWS_AS(pbwd_element(a3, Root{2, 3}, 0), InvalidInput);
}

TEST_CASE("root elements of trig-a(4) have the closed form") {
    Flavor a4 = Flavor::trig_a(4);
    for (const auto& root : positive_roots(a4)) {
        for (int r = -2; r <= 2; ++r) {
            auto e = pbwd_element(a4, root, r);
            auto q = e.numerator().divide_scalar((ParamPoly(1) - v(2)).pow(root.i - root.j));
            REQUIRE(q.has_value());
            REQUIRE(q->size() == 1);
            const auto& [m, c] = q->terms()[0];
            CHECK((c == 1 || c == -1));
            XPoly expected = x(root.j, 1, r + 1);
            if (root.i == root.j) expected = x(root.j, 1, r);
            for (int k = root.j + 1; k < root.i; ++k) expected *= x(k, 1);
            CHECK(XPoly::monomial(m.without_params()) == expected);
            // Only the single chain of colors survives in the denominator.
            CHECK(e.grading() == root_grading(a4, root));
        }
    }
}

TEST_CASE("custom recipes and vanishing choices") {
    Flavor a3 = Flavor::trig_a(3);
    PbwdChoice choice(a3);
    RootRecipe rec;
    rec.colors = {2, 1};
    rec.lambdas = {v(-1)};
    choice.set_recipe(Root{1, 2}, rec);
    auto e = pbwd_element(a3, Root{1, 2}, 1, choice);
    auto direct = q_bracket(gen(a3, 2, 1), gen(a3, 1, 0), v(-1));
    CHECK(e == direct);
    // [e_{1,0}, e_{1,0}]_1 vanishes; choosing colors out of the root is rejected.
    RootRecipe bad;
    bad.colors = {1, 3};
    CHECK_THROWS_AS(choice.set_recipe(Root{1, 2}, bad), InvalidInput);
}

TEST_CASE("psi_word examples") {
    Flavor a2 = Flavor::trig_a(2);
    CHECK(psi_word(a2, {}) == ShuffleElement::unit(a2));
    for (int r = -1; r <= 1; ++r) {
        auto p = psi_word(a2, {{1, r}, {1, r}});
        CHECK(p.numerator() == x(1, 1, r) * x(1, 2, r) * (ParamPoly(1) + v(-2)) * make_rational(1, 2));
    }
    CHECK(parse_word("e(1,0) e(1,0)") == Word{{1, 0}, {1, 0}});
    CHECK(parse_word("  e( 2 , -3 )e(1,4) ") == Word{{2, -3}, {1, 4}});
    CHECK_THROWS_AS(parse_word("e(1,0) f(1,0)"), InvalidInput);
}

TEST_CASE("k-fold products of a single generator") {
    Flavor a2 = Flavor::trig_a(2), y2 = Flavor::yang_a(2);
    for (int k = 1; k <= 4; ++k) {
        Rational kfact = 1;
        for (int t = 2; t <= k; ++t) kfact *= t;
        for (int r = -1; r <= 1; ++r) {
            Word w(k, {1, r});
            XPoly mono(1);
            for (int s = 1; s <= k; ++s) mono *= x(1, s, r);
            CHECK(psi_word(a2, w).numerator() == mono * (v(-k * (k - 1) / 2) * qfact(k)) * (Rational(1) / kfact));
            if (r >= 0) CHECK(psi_word(y2, w).numerator() == mono);
        }
    }
}

TEST_CASE("psi_monomial orders its factors") {
    Flavor a3 = Flavor::trig_a(3);
    PbwdChoice choice(a3);
    PbwdMonomial h;
    h.add(Root{2, 2}, 0);
    h.add(Root{1, 1}, 0);
    auto value = psi_monomial(a3, h, choice);
    CHECK(value.numerator() == x(1, 1) - x(2, 1) * v());

    Flavor a2 = Flavor::trig_a(2);
    PbwdMonomial sq;
    sq.add(Root{1, 1}, 0, 2);
    CHECK(psi_monomial(a2, sq, PbwdChoice(a2)).numerator() == XPoly((ParamPoly(1) + v(-2)) * make_rational(1, 2)));

    PbwdMonomial two;
    two.add(Root{1, 1}, 1);
    two.add(Root{1, 1}, -1);
    PbwdChoice desc(a2);
    desc.set_descending(Root{1, 1}, true);
    CHECK(psi_monomial(a2, two, PbwdChoice(a2)) == psi_word(a2, {{1, -1}, {1, 1}}));
    CHECK(psi_monomial(a2, two, desc) == psi_word(a2, {{1, 1}, {1, -1}}));

    PbwdMonomial single;
    single.add(Root{1, 2}, 1);
    CHECK(psi_monomial(a3, single, choice) == pbwd_element(a3, Root{1, 2}, 1));
}

TEST_CASE("monomial constraints") {
    Flavor s11 = Flavor::trig_super(1, 1);
    PbwdMonomial h;
    h.add(Root{1, 1}, 0, 2);
    CHECK_THROWS_AS(psi_monomial(s11, h, PbwdChoice(s11)), InvalidInput);
    Flavor y2 = Flavor::yang_a(2);
    PbwdMonomial neg;
    neg.add(Root{1, 1}, -1);
    CHECK_THROWS_AS(psi_monomial(y2, neg, PbwdChoice(y2)), InvalidInput);
}

TEST_CASE("grading and degree of monomials") {
    Flavor a3 = Flavor::trig_a(3);
    PbwdMonomial h;
    h.add(Root{1, 2}, 0);
    h.add(Root{1, 1}, 3, 2);
    CHECK(h.grading(a3) == std::vector<int>{3, 1});
    CHECK(h.degree(a3) == std::vector<int>{2, 1, 0});
    CHECK(h.size() == 3);
}

TEST_CASE("tilde scaling") {
    Flavor a2 = Flavor::trig_a(2), y2 = Flavor::yang_a(2);
    auto F = gen(a2, 1, 2);
    CHECK(tilde_scale(F, 0) == F);
    CHECK(tilde_scale(F, 1).numerator() == x(1, 1, 2) * (v() - v(-1)));
    auto G = psi_word(y2, {{1, 0}, {1, 1}});
    CHECK(tilde_scale(G, 2).numerator() == G.numerator() * h().pow(2));
    CHECK(Flavor::two_param(3).normalizer() == ParamPoly::monomial({1, -1}) - ParamPoly::monomial({-1, 1}));
}

TEST_CASE("evaluator cache agrees with direct evaluation") {
    Flavor s21 = Flavor::trig_super(2, 1);
    PbwdEvaluator eval{PbwdChoice(s21)};
    for (const auto& root : positive_roots(s21))
        for (int r = -1; r <= 1; ++r) {
            PbwdMonomial h;
            h.add(root, r);
            h.add(Root{1, 1}, 0);
            CHECK(eval.monomial(h) == psi_monomial(s21, h, PbwdChoice(s21)));
        }
}
