#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qsa/error.hpp"
#include "qsa/membership.hpp"
#include "support.hpp"

using namespace qsa;
using qsa::testing::Gen;
using qsa::testing::v;
using qsa::testing::x;

namespace {

ShuffleElement gen(const Flavor& f, int i, int r) { return ShuffleElement::generator(f, i, r); }
ParamPoly qint2() { return v() + v(-1); }

bool is_single(const Decomposition& dec, const PbwdMonomial& h) {
    return dec.entries.size() == 1 && dec.entries[0].monomial == h && dec.entries[0].coeff == ParamFrac(1);
}

// Sum of c * product, cleared of denominators, against f.
bool rank1_reconstructs(const XPoly& f, int k, const RankOneModel& kernel, const std::vector<RankOneTerm>& terms) {
    ParamPoly L(1);
    for (const auto& t : terms) L *= t.coeff.den();
    XPoly acc;
    for (const auto& t : terms) {
        ParamPoly scaled = *divide_exact(t.coeff.num() * L, t.coeff.den());
        acc += rank_one_product(kernel, t.modes, 1) * scaled;
    }
    std::map<VarCode, VarCode> rename;
    for (int s = 1; s <= k; ++s) rename[encode(yvar(1, s))] = encode(xvar(1, s));
    return acc.relabel(rename) == f * L;
}

}  // namespace

TEST_CASE("rank-one decomposition examples") {
    auto minus = rank_one_kernel("trig-sym-minus");
    auto one = decompose_rank1(XPoly(1), 2, minus);
    REQUIRE(one.size() == 1);
    CHECK(one[0].modes == ExponentTuple{0, 0});
    CHECK(one[0].coeff == ParamFrac(v() * 2, qint2()));

    auto lin = decompose_rank1(x(1, 1) + x(1, 2), 2, minus);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].modes == ExponentTuple{0, 1});
    CHECK(lin[0].coeff == ParamFrac(v(2) * 2));

    // The skew product of x^0 and x^1 is (x2 - x1)/2.
    auto skew = decompose_rank1(x(1, 1) - x(1, 2), 2, rank_one_kernel("skew"));
    REQUIRE(skew.size() == 1);
    CHECK(skew[0].modes == ExponentTuple{0, 1});
    CHECK(skew[0].coeff == ParamFrac(-2));

    CHECK_THROWS_AS(decompose_rank1(x(1, 1), 2, minus), InvalidInput);
    CHECK_THROWS_AS(decompose_rank1(XPoly(1), 2, rank_one_kernel("skew")), InvalidInput);
    CHECK_THROWS_AS(rank_one_kernel("cubic"), InvalidInput);
}

TEST_CASE("rank-one decomposition reconstructs random inputs") {
    Gen g(5);
    for (const std::string name : {"trig-sym-minus", "trig-sym-plus", "skew", "yang-sym", "trig-2p", "yang-skew"}) {
        auto kernel = rank_one_kernel(name);
        bool skew = kernel.flavor.is_skew(kernel.color);
        int nparams = kernel.flavor.params() == ParamSet::U ? 2 : 1;
        for (int trial = 0; trial < 6; ++trial) {
            int k = g.uniform(1, 3);
            int lo = kernel.flavor.is_yangian() ? 0 : -1;
            XPoly raw = g.xpoly({k}, 3, lo, 2, nparams);
            XPoly f = symmetrize(raw, {k}, skew ? std::set<int>{1} : std::set<int>{});
            if (f.is_zero()) continue;
            INFO(name << " f=" << f.to_string());
            auto terms = decompose_rank1(f, k, kernel);
            CHECK(rank1_reconstructs(f, k, kernel, terms));
        }
    }
}

TEST_CASE("decomposition examples") {
    Flavor a2 = Flavor::trig_a(2);
    auto dec = decompose(ShuffleElement(a2, {2}, XPoly(1)), PbwdChoice(a2));
    REQUIRE(dec.entries.size() == 1);
    PbwdMonomial sq;
    sq.add(Root{1, 1}, 0, 2);
    CHECK(dec.entries[0].monomial == sq);
    CHECK(dec.entries[0].coeff == ParamFrac(v() * 2, qint2()));

    Flavor a3 = Flavor::trig_a(3);
    auto F = shuffle_product(gen(a3, 1, 0), gen(a3, 2, 0)) - shuffle_product(gen(a3, 2, 0), gen(a3, 1, 0)) * v();
    PbwdMonomial root;
    root.add(Root{1, 2}, 0);
    CHECK(is_single(decompose(F, PbwdChoice(a3)), root));

    CHECK(decompose(ShuffleElement::zero(a3, {1, 1}), PbwdChoice(a3)).entries.empty());
    CHECK_THROWS_AS(decompose(F, PbwdChoice(a2)), FlavorMismatch);
}

TEST_CASE("round trip through the PBWD basis") {
    struct Case {
        Flavor flavor;
        int lo, hi, max_total;
    };
    for (const auto& c : {Case{Flavor::trig_a(3), -1, 1, 3}, Case{Flavor::yang_a(3), 0, 2, 3},
                          Case{Flavor::trig_super(2, 1), -1, 1, 3}, Case{Flavor::two_param(3), -1, 1, 2},
                          Case{Flavor::yang_super(1, 2), 0, 1, 2}}) {
        PbwdChoice choice(c.flavor);
        PbwdEvaluator eval(choice);
        int rank = c.flavor.rank();
        std::vector<int> grading(rank, 0);
        std::function<void(int)> walk = [&](int pos) {
            if (pos == rank) {
                int total = 0;
                for (int k : grading) total += k;
                if (total == 0 || total > c.max_total) return;
                for (const auto& h : enumerate_monomials(c.flavor, grading, c.lo, c.hi)) {
                    INFO(c.flavor.to_string() << " h=" << h.to_string());
                    CHECK(is_single(decompose(eval.monomial(h), choice), h));
                }
                return;
            }
            for (int k = 0; k <= c.max_total; ++k) {
                grading[pos] = k;
                walk(pos + 1);
            }
            grading[pos] = 0;
        };
        walk(0);
    }
}

TEST_CASE("decomposition under a non-default choice") {
    Flavor a3 = Flavor::trig_a(3);
    PbwdChoice choice(a3);
    RootRecipe rec;
    rec.colors = {2, 1};
    rec.lambdas = {v(-1)};
    choice.set_recipe(Root{1, 2}, rec);
    choice.set_descending(Root{1, 1}, true);
    PbwdEvaluator eval(choice);
    for (const auto& h : enumerate_monomials(a3, {2, 1}, -1, 1)) {
        INFO(h.to_string());
        CHECK(is_single(decompose(eval.monomial(h), choice), h));
    }
}

TEST_CASE("decomposition is linear") {
    Flavor a3 = Flavor::trig_a(3);
    Gen g(9);
    PbwdChoice choice(a3);
    for (int trial = 0; trial < 5; ++trial) {
        auto F = psi_word(a3, {{1, g.uniform(-1, 1)}, {2, g.uniform(-1, 1)}, {1, g.uniform(-1, 1)}});
        auto G = psi_word(a3, {{2, g.uniform(-1, 1)}, {1, g.uniform(-1, 1)}, {1, g.uniform(-1, 1)}});
        ParamPoly a = g.nonzero_param_poly(), b = g.nonzero_param_poly();
        auto dF = decompose(F, choice), dG = decompose(G, choice), dS = decompose(F * a + G * b, choice);
        std::map<PbwdMonomial, ParamFrac> expected;
        for (const auto& e : dF.entries) expected[e.monomial] += e.coeff * ParamFrac(a);
        for (const auto& e : dG.entries) expected[e.monomial] += e.coeff * ParamFrac(b);
        std::map<PbwdMonomial, ParamFrac> got;
        for (const auto& e : dS.entries) got[e.monomial] = e.coeff;
        for (auto it = expected.begin(); it != expected.end();)
            it = it->second.is_zero() ? expected.erase(it) : std::next(it);
        CHECK(got == expected);
    }
}

TEST_CASE("wheel violations are reported") {
    Flavor a3 = Flavor::trig_a(3);
    // Constant numerator at grading (2,1) does not satisfy the wheel conditions.
    ShuffleElement bad(a3, {2, 1}, XPoly(1));
    REQUIRE_FALSE(check_wheel(bad));
    CHECK_THROWS_AS(decompose(bad, PbwdChoice(a3)), DivisionFailure);
}

TEST_CASE("integrality in trig-a(2)") {
    Flavor a2 = Flavor::trig_a(2);
    ParamPoly nz = v() - v(-1);
    for (int r = -1; r <= 1; ++r) {
        ShuffleElement F(a2, {2}, x(1, 1, r) * x(1, 2, r) * nz.pow(2));
        auto report = integrality_report(F);
        CHECK_FALSE(report.holds);
        CHECK(report.detail.find("[2]_v!") != std::string::npos);
        CHECK(report.detail.find("[1;1]->2") != std::string::npos);
        CHECK(is_integral(F * qint2()));
        CHECK_FALSE(is_integral_by_basis(F, PbwdChoice(a2)));
        CHECK(is_integral_by_basis(F * qint2(), PbwdChoice(a2)));
    }
    CHECK(is_integral(tilde_scale(gen(a2, 1, 3), 1)));
    CHECK_FALSE(is_integral(gen(a2, 1, 3)));
}

TEST_CASE("integrality of normalized words and their shifts") {
    Flavor a3 = Flavor::trig_a(3);
    PbwdChoice choice(a3);
    Gen g(21);
    for (int trial = 0; trial < 8; ++trial) {
        Word w{{1, g.uniform(-1, 1)}, {2, g.uniform(-1, 1)}, {1, g.uniform(-1, 1)}};
        auto F = tilde_scale(psi_word(a3, w), 3);
        CHECK(is_integral(F));
        CHECK(is_integral_by_basis(F, choice));
        for (int l = 1; l <= 2; ++l) CHECK(is_integral(shift_map(F, l)));
    }
}

TEST_CASE("the good predicate") {
    Flavor y2 = Flavor::yang_a(2), y3 = Flavor::yang_a(3), a2 = Flavor::trig_a(2);
    Gen g(4);
    for (int trial = 0; trial < 5; ++trial) {
        int k = g.uniform(1, 3);
        XPoly f = symmetrize(g.xpoly({k}, 3, 0, 2), {k}, {});
        CHECK(is_good(ShuffleElement(y2, {k}, f)));
    }
    CHECK(is_good(psi_word(y3, {{1, 0}, {2, 1}, {1, 1}})));
    for (int k = 1; k <= 3; ++k) {
        auto P = psi_word(a2, Word(k, {1, 0}));
        auto divided = P.numerator().divide_scalar(qfact(k));
        REQUIRE(divided.has_value());
        CHECK(is_good(ShuffleElement(a2, {k}, *divided)));
    }
    CHECK_THROWS_AS(is_good(gen(Flavor::trig_super(1, 1), 1, 0)), NotImplemented);
    // Not good: phi at the long root misses a factor of h.
    ShuffleElement lone(y3, {1, 1}, XPoly(1));
    CHECK_FALSE(is_good(lone));
}

TEST_CASE("yangian integrality is divisibility") {
    Flavor y3 = Flavor::yang_a(3);
    auto F = psi_word(y3, {{1, 0}, {2, 0}});
    CHECK_FALSE(is_integral(F));
    CHECK(is_integral(tilde_scale(F, 2)));
}

TEST_CASE("independence certificates") {
    Flavor a2 = Flavor::trig_a(2);
    auto one = independence_certificate(a2, {1}, 0, 2, PbwdChoice(a2));
    CHECK(one.independent);
    CHECK(one.rank == 3);
    CHECK(one.monomials == 3);
    Flavor a3 = Flavor::trig_a(3);
    auto two = independence_certificate(a3, {1, 1}, 0, 1, PbwdChoice(a3));
    CHECK(two.independent);
    CHECK(two.rank == two.monomials);
    Flavor s11 = Flavor::trig_super(1, 1);
    auto skew = independence_certificate(s11, {2}, 0, 1, PbwdChoice(s11));
    CHECK(skew.monomials == 1);
    CHECK(skew.independent);
}

namespace {

// (v-v^-1)^{|k|} times a random combination of words in generators and
// divided squares; coefficients in Z[v, v^-1] keep or break integrality.
ShuffleElement random_trig_element(Gen& g, const Flavor& flavor, int total) {
    std::optional<ShuffleElement> acc;
    int terms = g.uniform(1, 2);
    for (int t = 0; t < terms; ++t) {
        ShuffleElement word = ShuffleElement::unit(flavor);
        int used = 0;
        while (used < total) {
            int i = g.uniform(1, flavor.rank());
            int r = g.uniform(-1, 1);
            if (used + 2 <= total && g.uniform(0, 2) == 0) {
                auto sq = psi_word(flavor, {{i, r}, {i, r}});
                ShuffleElement divided(flavor, sq.grading(), *sq.numerator().divide_scalar(qint2()));
                word = shuffle_product(word, divided);
                used += 2;
            } else {
                word = shuffle_product(word, gen(flavor, i, r));
                used += 1;
            }
        }
        ParamPoly c = std::vector<ParamPoly>{ParamPoly(1), v(), -v(-1), qint2(), ParamPoly(2)}[g.uniform(0, 4)];
        if (!acc) {
            acc = word * c;
        } else if (word.grading() == acc->grading()) {
            *acc += word * c;
        }
    }
    return tilde_scale(*acc, total);
}

}  // namespace

TEST_CASE("the two integrality tests agree") {
    Gen g(77);
    int integral = 0, rejected = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Flavor flavor = g.coin() ? Flavor::trig_a(2) : Flavor::trig_a(3);
        auto F = random_trig_element(g, flavor, g.uniform(1, 3));
        bool a = is_integral(F);
        INFO(F.numerator().to_string());
        CHECK(a == is_integral_by_basis(F, PbwdChoice(flavor)));
        (a ? integral : rejected) += 1;
    }
    CHECK(integral > 0);
    CHECK(rejected > 0);
}
