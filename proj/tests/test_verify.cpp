#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qsa/error.hpp"
#include "qsa/verify.hpp"
#include "support.hpp"

using namespace qsa;
using qsa::testing::v;
using qsa::testing::x;

namespace {

ShuffleElement e(const Flavor& f, int i, int r) { return ShuffleElement::generator(f, i, r); }

bool odd(const ShuffleElement& F) {
    const Flavor& f = F.flavor();
    return f.is_super() && F.grading()[f.m() - 1] % 2 == 1;
}

ShuffleElement br(const ShuffleElement& a, const ShuffleElement& b) { return q_bracket(a, b, 1, {odd(a), odd(b)}); }

int count_family(const std::vector<RelationInstance>& rels, const std::string& family) {
    int n = 0;
    for (const auto& r : rels) n += r.family == family;
    return n;
}

}  // namespace

TEST_CASE("relation instances vanish in every flavor") {
    std::vector<std::pair<Flavor, std::pair<int, int>>> cases{{Flavor::trig_a(3), {-1, 0}},
                                                              {Flavor::trig_a(4), {0, 0}},
                                                              {Flavor::two_param(3), {-1, 0}},
                                                              {Flavor::trig_super(2, 2), {0, 1}},
                                                              {Flavor::trig_super(1, 2), {0, 1}},
                                                              {Flavor::yang_a(3), {0, 1}},
                                                              {Flavor::yang_super(2, 2), {0, 1}}};
    for (const auto& [f, window] : cases) {
        auto rels = relation_instances(f, window.first, window.second);
        CHECK(count_family(rels, "quadratic") > 0);
        CHECK(count_family(rels, "cubic Serre") > 0);
        for (const auto& r : rels) {
            INFO(f.to_string() << " " << r.family << " " << r.modes);
            CHECK(r.value.is_zero());
        }
    }
    // c_13 = 0 in trig-a(4).
    CHECK(count_family(relation_instances(Flavor::trig_a(4), 0, 0), "commutation") == 1);
    auto super = relation_instances(Flavor::yang_super(2, 2), 0, 0);
    CHECK(count_family(super, "quartic odd, symmetrized") == 1);
    CHECK(count_family(super, "quartic odd at zero modes") == 1);
    CHECK(count_family(relation_instances(Flavor::trig_super(2, 2), 0, 0), "quartic odd") == 1);
    CHECK_THROWS_AS(relation_instances(Flavor::yang_a(3), -1, 0), InvalidInput);
}

TEST_CASE("perturbed relations do not vanish") {
    Flavor a3 = Flavor::trig_a(3);
    // Quadratic relation with the wrong power of v.
    auto wrong = shuffle_product(e(a3, 1, 1), e(a3, 2, 0)) - shuffle_product(e(a3, 1, 0), e(a3, 2, 1)) * v(-1) -
                 shuffle_product(e(a3, 2, 0), e(a3, 1, 1)) * v(-2) + shuffle_product(e(a3, 2, 1), e(a3, 1, 0));
    CHECK_FALSE(wrong.is_zero());
    // The Serre combination needs its symmetrization.
    auto half = q_bracket(e(a3, 1, 0), q_bracket(e(a3, 1, 1), e(a3, 2, 0), v(-1)), v(1));
    CHECK_FALSE(half.is_zero());
    // Without the symmetrization in r1, r2 the odd quartic expression survives.
    Flavor ys = Flavor::yang_super(2, 2);
    auto single = br(br(e(ys, 1, 0), e(ys, 2, 0)), br(e(ys, 3, 0), e(ys, 2, 1)));
    CHECK_FALSE(single.is_zero());
    auto swapped = br(br(e(ys, 1, 0), e(ys, 2, 1)), br(e(ys, 3, 0), e(ys, 2, 0)));
    CHECK((single + swapped).is_zero());
}

TEST_CASE("combinatorial residues") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(combinatorial_residue(k, false).is_zero());
        CHECK(combinatorial_residue(k, true).is_zero());
    }
    // Independent numeric check of the multiplicative identity for k = 3 at a
    // rational point: sum_i prod_{j != i} (x_j - v^-2 x_i)/(x_j - x_i).
    std::vector<Rational> pts{Rational(2), Rational(5), make_rational(-1, 3)};
    Rational vv = make_rational(3, 2);
    Rational lhs = 0;
    for (int i = 0; i < 3; ++i) {
        Rational term = 1;
        for (int j = 0; j < 3; ++j)
            if (j != i) term *= (pts[j] - pts[i] / (vv * vv)) / (pts[j] - pts[i]);
        lhs += term;
    }
    CHECK(lhs == 1 + 1 / (vv * vv) + 1 / (vv * vv * vv * vv));
}

TEST_CASE("suites pass at small sizes") {
    for (const auto& name : suite_names()) {
        // Closure needs length 4 to reach the second super wheel kind and
        // the integrality checks demand both outcomes among the samples.
        SuiteOptions small;
        small.max_k = name == "closure" ? 4 : 3;
        small.trials = name == "integrality" ? 24 : 8;
        int reported = 0;
        auto results = run_suite(name, small, [&](const CheckResult&) { ++reported; });
        CHECK(reported == static_cast<int>(results.size()));
        CHECK(!results.empty());
        for (const auto& r : results) {
            INFO(name << ": " << r.name << " " << r.detail);
            CHECK(r.passed);
        }
    }
}

TEST_CASE("suite options") {
    SuiteOptions o;
    o.max_k = 2;
    o.window = std::pair{-1, 0};
    auto results = run_suite("factorial", o);
    REQUIRE(results.size() == 4);
    CHECK(results[0].name == "trig-a(2) k=1 r in [-1,0]");
    // Yangian modes keep the window size but start at zero.
    CHECK(results[2].name == "yang-a(2) k=1 r in [0,1]");
    CHECK_THROWS_AS(run_suite("nonsense"), InvalidInput);
    o.window = std::pair{1, 0};
    CHECK_THROWS_AS(run_suite("factorial", o), InvalidInput);
}

TEST_CASE("closure exercises both super wheel kinds") {
    SuiteOptions o;
    o.max_k = 4;
    o.trials = 8;
    for (const auto& r : run_suite("closure", o)) {
        if (r.name.find("super") == std::string::npos) continue;
        CHECK(r.detail.find("second-kind") != std::string::npos);
        CHECK(r.passed);
    }
}
