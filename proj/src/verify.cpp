#include "qsa/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "qsa/error.hpp"

namespace qsa {

namespace {

using Check = std::function<void(CheckResult)>;

ShuffleElement e(const Flavor& f, int i, int r) { return ShuffleElement::generator(f, i, r); }
ShuffleElement mul(const ShuffleElement& a, const ShuffleElement& b) { return shuffle_product(a, b); }

bool odd(const ShuffleElement& F) {
    const Flavor& f = F.flavor();
    return f.is_super() && F.grading()[f.m() - 1] % 2 == 1;
}

// Super bracket [a, b]_lambda.
ShuffleElement br(const ShuffleElement& a, const ShuffleElement& b, const ParamPoly& lambda = ParamPoly(1)) {
    return q_bracket(a, b, lambda, {odd(a), odd(b)});
}

ParamPoly vp(int k) { return ParamPoly::param(0, k); }
ParamPoly up(int a, int b) { return ParamPoly::monomial({a, b}); }

std::string modes(std::initializer_list<std::pair<const char*, int>> named) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : named) {
        out << (first ? "" : " ") << name << "=" << value;
        first = false;
    }
    return out.str();
}

std::string range(int lo, int hi) { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

// Exponents of <i, j> over (u1, u2), where v_k = u_k^2.
PExp pairing(int i, int j) {
    return {2 * ((i == j) - (i + 1 == j)), 2 * ((i == j + 1) - (i == j))};
}

void quadratic_trig(const Flavor& f, int lo, int hi, std::vector<RelationInstance>& out) {
    int n = f.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            ParamPoly a, b, c;
            if (f.kind() == Kind::TrigTwoParam) {
                if (std::abs(i - j) > 1) continue;
                PExp pij = pairing(i, j), pji = pairing(j, i);
                a = up((pji[0] + pij[0]) / 2, (pji[1] + pij[1]) / 2);
                b = up(pji[0], pji[1]);
                c = up((pji[0] - pij[0]) / 2, (pji[1] - pij[1]) / 2);
            } else {
                int cij = f.cartan(i, j);
                if (cij == 0) continue;
                a = b = vp(cij);
                c = ParamPoly(1);
            }
            for (int r = lo; r <= hi; ++r)
                for (int s = lo; s <= hi; ++s) {
                    auto val = mul(e(f, i, r + 1), e(f, j, s)) - mul(e(f, i, r), e(f, j, s + 1)) * a -
                               mul(e(f, j, s), e(f, i, r + 1)) * b + mul(e(f, j, s + 1), e(f, i, r)) * c;
                    out.push_back({"quadratic", modes({{"i", i}, {"j", j}, {"r", r}, {"s", s}}), val});
                }
        }
}

void quadratic_yangian(const Flavor& f, int lo, int hi, std::vector<RelationInstance>& out) {
    int n = f.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int cij = f.cartan(i, j);
            if (cij == 0) continue;
            ParamPoly coeff = ParamPoly::param(0) * make_rational(cij, 2);
            for (int r = lo; r <= hi; ++r)
                for (int s = lo; s <= hi; ++s) {
                    auto val = br(e(f, i, r + 1), e(f, j, s)) - br(e(f, i, r), e(f, j, s + 1)) -
                               (mul(e(f, i, r), e(f, j, s)) + mul(e(f, j, s), e(f, i, r))) * coeff;
                    out.push_back({"quadratic", modes({{"i", i}, {"j", j}, {"r", r}, {"s", s}}), val});
                }
        }
}

// [e_i, e_j] = 0 (super bracket) whenever the pairing vanishes.
void commutation(const Flavor& f, int lo, int hi, std::vector<RelationInstance>& out) {
    int n = f.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            bool applies = f.kind() == Kind::TrigTwoParam ? std::abs(i - j) > 1 : f.cartan(i, j) == 0;
            if (!applies) continue;
            for (int r = lo; r <= hi; ++r)
                for (int s = (i == j ? r : lo); s <= hi; ++s)
                    out.push_back({"commutation", modes({{"i", i}, {"j", j}, {"r", r}, {"s", s}}),
                                   br(e(f, i, r), e(f, j, s))});
        }
}

void serre(const Flavor& f, int lo, int hi, std::vector<RelationInstance>& out) {
    int n = f.rank();
    for (int i = 1; i <= n; ++i) {
        if (f.is_super() && i == f.m()) continue;
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > n) continue;
            ParamPoly inner(1), outer(1);
            if (f.kind() == Kind::TrigTwoParam) {
                inner = j == i + 1 ? up(0, 2) : up(0, -2);
                outer = j == i + 1 ? up(2, 0) : up(-2, 0);
            } else if (!f.is_yangian()) {
                inner = vp(-1);
                outer = vp(1);
            }
            for (int r1 = lo; r1 <= hi; ++r1)
                for (int r2 = r1; r2 <= hi; ++r2)
                    for (int s = lo; s <= hi; ++s) {
                        auto term = [&](int a, int b) {
                            return br(e(f, i, a), br(e(f, i, b), e(f, j, s), inner), outer);
                        };
                        out.push_back({"cubic Serre", modes({{"i", i}, {"j", j}, {"r1", r1}, {"r2", r2}, {"s", s}}),
                                       term(r1, r2) + term(r2, r1)});
                    }
        }
    }
}

void quartic(const Flavor& f, int lo, int hi, std::vector<RelationInstance>& out) {
    int m = f.m();
    if (m < 2 || m + 1 > f.rank()) return;
    for (int r1 = lo; r1 <= hi; ++r1)
        for (int r2 = r1; r2 <= hi; ++r2)
            for (int s = lo; s <= hi; ++s)
                for (int t = lo; t <= hi; ++t) {
                    auto label = modes({{"r1", r1}, {"r2", r2}, {"s", s}, {"s'", t}});
                    if (f.is_yangian()) {
                        auto term = [&](int a, int b) {
                            return br(br(e(f, m - 1, s), e(f, m, a)), br(e(f, m + 1, t), e(f, m, b)));
                        };
                        out.push_back({"quartic odd, symmetrized", label, term(r1, r2) + term(r2, r1)});
                    } else {
                        auto term = [&](int a, int b) {
                            return br(br(br(e(f, m - 1, s), e(f, m, a), vp(-1)), e(f, m + 1, t), vp(1)), e(f, m, b));
                        };
                        out.push_back({"quartic odd", label, term(r1, r2) + term(r2, r1)});
                    }
                }
    if (f.is_yangian())
        for (int s = lo; s <= hi; ++s)
            for (int t = lo; t <= hi; ++t)
                out.push_back({"quartic odd at zero modes", modes({{"s", s}, {"s'", t}}),
                               br(br(e(f, m - 1, s), e(f, m, 0)), br(e(f, m + 1, t), e(f, m, 0)))});
}

std::pair<int, int> window_for(const Flavor& f, const SuiteOptions& o, std::pair<int, int> trig_default,
                               std::pair<int, int> yang_default) {
    if (!o.window) return f.is_yangian() ? yang_default : trig_default;
    auto [lo, hi] = *o.window;
    if (lo > hi) throw InvalidInput("empty window " + range(lo, hi));
    if (f.is_yangian() && lo < 0) return {0, hi - lo};
    return {lo, hi};
}

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

ParamPoly factorial(int k) {
    Rational out = 1;
    for (int t = 2; t <= k; ++t) out *= t;
    return ParamPoly(out);
}

XPoly power_monomial(int k, int r) {
    XPoly out(1);
    for (int s = 1; s <= k; ++s) out *= XPoly::var(xvar(1, s), r);
    return out;
}

// ------------------------------------------------------------ suites

void factorial_suite(const SuiteOptions& o, const Check& report) {
    int max_k = pick(o.max_k, 6);
    for (const Flavor& f : {Flavor::trig_a(2), Flavor::yang_a(2)}) {
        auto [lo, hi] = window_for(f, o, {-2, 2}, {0, 3});
        for (int k = 1; k <= max_k; ++k) {
            CheckResult res{f.to_string() + " k=" + std::to_string(k) + " r in " + range(lo, hi), true, ""};
            for (int r = lo; r <= hi && res.passed; ++r) {
                XPoly expected = power_monomial(k, r);
                if (!f.is_yangian()) {
                    ParamPoly c = vp(-k * (k - 1) / 2) * qfact(k);
                    expected *= c;
                    expected *= Rational(1) / factorial(k).constant_term();
                }
                if (psi_word(f, Word(k, {1, r})).numerator() != expected) {
                    res.passed = false;
                    res.detail = "mismatch at r=" + std::to_string(r);
                }
            }
            report(res);
        }
    }
}

void combinatorial_suite(const SuiteOptions& o, const Check& report) {
    int max_k = pick(o.max_k, 6);
    for (bool yangian : {false, true})
        for (int k = 1; k <= max_k; ++k) {
            XPoly residue = combinatorial_residue(k, yangian);
            report({std::string(yangian ? "additive" : "multiplicative") + " identity k=" + std::to_string(k),
                    residue.is_zero(), residue.is_zero() ? "" : "residue " + residue.to_string()});
        }
}

void relations_suite(const SuiteOptions& o, const Check& report) {
    std::vector<Flavor> flavors{Flavor::trig_a(3), Flavor::two_param(3), Flavor::trig_super(2, 2), Flavor::yang_a(3),
                                Flavor::yang_super(2, 2)};
    for (const Flavor& f : flavors) {
        auto [lo, hi] = window_for(f, o, {-1, 1}, {0, 2});
        std::map<std::string, CheckResult> families;
        std::vector<std::string> order;
        for (const auto& rel : relation_instances(f, lo, hi)) {
            if (!families.count(rel.family)) {
                order.push_back(rel.family);
                families[rel.family] = {f.to_string() + " " + rel.family + " modes in " + range(lo, hi), true, ""};
            }
            auto& res = families[rel.family];
            if (!rel.value.is_zero() && res.passed) {
                res.passed = false;
                res.detail = "nonzero at " + rel.modes;
            }
        }
        for (const auto& name : order) report(families[name]);
    }
}

void closure_suite(const SuiteOptions& o, const Check& report) {
    int max_k = pick(o.max_k, 6);
    int trials = pick(o.trials, 200);
    std::mt19937_64 rng(o.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<Flavor> flavors{Flavor::trig_a(3), Flavor::two_param(3), Flavor::trig_super(2, 2), Flavor::yang_a(3),
                                Flavor::yang_super(2, 2)};
    for (const Flavor& f : flavors) {
        auto [lo, hi] = window_for(f, o, {-1, 1}, {0, 2});
        int failures = 0;
        std::map<std::string, int> kinds;
        std::string first_failure;
        for (int t = 0; t < trials; ++t) {
            Word w;
            // A quarter of the super words straddle the odd color so that
            // both wheel kinds are exercised.
            if (f.is_super() && t % 4 == 0 && f.m() >= 2 && f.m() < f.rank() && max_k >= 4) {
                std::vector<int> colors{f.m() - 1, f.m(), f.m(), f.m() + 1};
                std::shuffle(colors.begin(), colors.end(), rng);
                for (int c : colors) w.push_back({c, uniform(lo, hi)});
            } else {
                int len = uniform(1, max_k);
                for (int s = 0; s < len; ++s) w.push_back({uniform(1, f.rank()), uniform(lo, hi)});
            }
            auto F = psi_word(f, w);
            for (const auto& p : wheel_patterns(f, F.grading())) kinds[p.kind] += 1;
            if (!check_pole(F) || !check_wheel(F)) {
                if (failures++ == 0) {
                    std::ostringstream word;
                    for (auto [i, r] : w) word << "e(" << i << "," << r << ")";
                    first_failure = word.str();
                }
            }
        }
        std::string detail;
        for (const auto& [kind, count] : kinds) detail += kind + "-kind patterns " + std::to_string(count) + "; ";
        bool both = !f.is_super() || (kinds.count("first") && kinds.count("second"));
        if (!both) detail += "super words did not exercise both wheel kinds; ";
        if (failures) detail += std::to_string(failures) + " failures, first " + first_failure;
        report({f.to_string() + " " + std::to_string(trials) + " words of length <= " + std::to_string(max_k),
                failures == 0 && both, detail});
    }
}

// All gradings with the given total.
std::vector<std::vector<int>> gradings(int rank, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> g(rank, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == rank - 1) {
            g[pos] = left;
            out.push_back(g);
            return;
        }
        for (int k = left; k >= 0; --k) {
            g[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    rec(0, total);
    return out;
}

void roundtrip_suite(const SuiteOptions& o, const Check& report) {
    int max_k = pick(o.max_k, 3);
    for (const Flavor& f : {Flavor::trig_a(3), Flavor::yang_a(3), Flavor::trig_super(2, 1)}) {
        auto [lo, hi] = window_for(f, o, {-1, 1}, {0, 2});
        PbwdChoice choice(f);
        PbwdEvaluator eval(choice);
        for (int total = 1; total <= max_k; ++total) {
            int count = 0, bad = 0;
            std::string first;
            for (const auto& grading : gradings(f.rank(), total))
                for (const auto& h : enumerate_monomials(f, grading, lo, hi)) {
                    ++count;
                    Decomposition dec = decompose(eval.monomial(h), choice);
                    bool single = dec.entries.size() == 1 && dec.entries[0].monomial == h &&
                                  dec.entries[0].coeff == ParamFrac(1);
                    if (!single && bad++ == 0) first = h.to_string();
                }
            report({f.to_string() + " |k|=" + std::to_string(total) + " modes in " + range(lo, hi) + ": " +
                        std::to_string(count) + " monomials",
                    bad == 0, bad ? std::to_string(bad) + " failures, first " + first : ""});
        }
    }
    Flavor a3 = Flavor::trig_a(3);
    auto cert = independence_certificate(a3, {2, 1}, 0, 1, PbwdChoice(a3));
    report({"trig-a(3) grading (2,1) modes in [0,1]: rank " + std::to_string(cert.rank) + " of " +
                std::to_string(cert.monomials),
            cert.independent && cert.rank == cert.monomials, cert.method});
}

ParamPoly qint2() { return vp(1) + vp(-1); }

// normalizer^{total} times a combination of words in generators and divided
// squares; the divided squares may break integrality.
ShuffleElement random_trig_element(std::mt19937_64& rng, const Flavor& f, int total) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::optional<ShuffleElement> acc;
    int terms = uniform(1, 2);
    for (int t = 0; t < terms; ++t) {
        ShuffleElement word = ShuffleElement::unit(f);
        int used = 0;
        while (used < total) {
            int i = uniform(1, f.rank());
            int r = uniform(-1, 1);
            if (used + 2 <= total && uniform(0, 2) == 0) {
                auto sq = psi_word(f, {{i, r}, {i, r}});
                word = mul(word, ShuffleElement(f, sq.grading(), *sq.numerator().divide_scalar(qint2())));
                used += 2;
            } else {
                word = mul(word, e(f, i, r));
                used += 1;
            }
        }
        ParamPoly c = std::vector<ParamPoly>{ParamPoly(1), vp(1), -vp(-1), qint2(), ParamPoly(2)}[uniform(0, 4)];
        if (!acc)
            acc = word * c;
        else if (word.grading() == acc->grading())
            *acc += word * c;
    }
    return tilde_scale(*acc, total);
}

Word random_word(std::mt19937_64& rng, const Flavor& f, int len, int lo, int hi) {
    Word w;
    for (int s = 0; s < len; ++s)
        w.push_back({std::uniform_int_distribution<int>(1, f.rank())(rng), std::uniform_int_distribution<int>(lo, hi)(rng)});
    return w;
}

// Symmetric Laurent polynomial in x_{i,1..k} with Z[v, v^-1] coefficients.
XPoly random_symmetric(std::mt19937_64& rng, int color, int k) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    XPoly out;
    int terms = uniform(1, 2);
    for (int t = 0; t < terms; ++t) {
        ExponentTuple r(k);
        for (auto& x : r) x = uniform(-1, 1);
        std::sort(r.begin(), r.end());
        out += monomial_symmetric(r, color) * (vp(uniform(-1, 1)) * ParamPoly(uniform(1, 3)));
    }
    return out;
}

void integrality_suite(const SuiteOptions& o, const Check& report) {
    int trials = pick(o.trials, 100);
    int max_k = pick(o.max_k, 4);
    std::mt19937_64 rng(o.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Flavor a2 = Flavor::trig_a(2), a3 = Flavor::trig_a(3);
    auto [lo, hi] = window_for(a2, o, {-2, 2}, {0, 3});

    {
        CheckResult res{"trig-a(2) grading (2): normalizer^2 (x1 x2)^r rejected, [2] times it accepted, r in " +
                            range(lo, hi),
                        true, ""};
        for (int r = lo; r <= hi; ++r) {
            ShuffleElement F(a2, {2}, power_monomial(2, r) * a2.normalizer().pow(2));
            auto rejected = integrality_report(F);
            if (rejected.holds || !is_integral(F * qint2())) {
                res.passed = false;
                res.detail = "r=" + std::to_string(r);
                break;
            }
            res.detail = rejected.detail;
        }
        report(res);
    }
    {
        int integral = 0, rejected = 0, disagree = 0;
        for (int t = 0; t < trials; ++t) {
            Flavor f = uniform(0, 1) ? a2 : a3;
            auto F = random_trig_element(rng, f, uniform(1, max_k));
            bool a = is_integral(F);
            if (a != is_integral_by_basis(F, PbwdChoice(f))) ++disagree;
            (a ? integral : rejected) += 1;
        }
        report({std::to_string(trials) + " random trig-a elements with |k| <= " + std::to_string(max_k) +
                    ": both tests agree",
                disagree == 0 && integral > 0 && rejected > 0,
                std::to_string(integral) + " integral, " + std::to_string(rejected) + " rejected, " +
                    std::to_string(disagree) + " disagreements"});
    }
    {
        int bad = 0;
        for (int t = 0; t < trials / 4; ++t) {
            Word w = random_word(rng, a3, uniform(1, max_k), -1, 1);
            if (!is_integral(tilde_scale(psi_word(a3, w), static_cast<int>(w.size())))) ++bad;
        }
        report({"trig-a(3) normalized words are integral", bad == 0, std::to_string(bad) + " failures"});
    }
    {
        int bad = 0, count = 0;
        for (int k1 = 0; k1 <= 2; ++k1)
            for (int k2 = 0; k2 <= 2; ++k2) {
                if (k1 + k2 == 0) continue;
                for (int t = 0; t < 3; ++t) {
                    XPoly f = a3.normalizer().pow(k1 + k2);
                    std::vector<int> k{k1, k2};
                    for (int i = 1; i <= 2; ++i) {
                        for (int r = 1; r <= k[i - 1]; ++r)
                            for (int s = 1; s <= k[i - 1]; ++s)
                                if (r != s)
                                    f *= XPoly::var(xvar(i, r)) - XPoly::var(xvar(i, s)) * vp(-2);
                        if (k[i - 1] > 0) f *= random_symmetric(rng, i, k[i - 1]);
                    }
                    ++count;
                    if (!is_integral(ShuffleElement(a3, k, f))) ++bad;
                }
            }
        report({"trig-a(3) explicit family with k <= (2,2) is integral", bad == 0,
                std::to_string(count) + " elements, " + std::to_string(bad) + " failures"});
    }
    {
        int bad = 0, integral = 0, rejected = 0;
        for (int t = 0; t < trials / 4; ++t) {
            auto F = random_trig_element(rng, a3, uniform(1, 3));
            bool a = is_integral(F);
            (a ? integral : rejected) += 1;
            for (int l = 1; l <= 2; ++l)
                if (is_integral(shift_map(F, l)) != a) ++bad;
        }
        report({"trig-a(3) shift maps preserve integrality both ways", bad == 0 && integral > 0 && rejected > 0,
                std::to_string(integral) + " integral, " + std::to_string(rejected) + " rejected, " +
                    std::to_string(bad) + " mismatches"});
    }
    {
        Flavor y2 = Flavor::yang_a(2), y3 = Flavor::yang_a(3);
        int bad = 0;
        for (int t = 0; t < trials / 4; ++t) {
            int k = uniform(1, 3);
            XPoly f;
            for (int s = 0; s < 2; ++s) {
                ExponentTuple r(k);
                for (auto& x : r) x = uniform(0, 2);
                std::sort(r.begin(), r.end());
                f += monomial_symmetric(r, 1) * ParamPoly::param(0, uniform(0, 1));
            }
            if (!is_good(ShuffleElement(y2, {k}, f))) ++bad;
        }
        report({"yang-a(2) symmetric polynomials are good", bad == 0, std::to_string(bad) + " failures"});
        int bad_good = 0, bad_div = 0;
        for (int t = 0; t < trials / 4; ++t) {
            Word w = random_word(rng, y3, uniform(1, max_k), 0, 2);
            auto F = psi_word(y3, w);
            if (!is_good(F)) ++bad_good;
            if (!is_integral(tilde_scale(F, static_cast<int>(w.size())))) ++bad_div;
        }
        report({"yang-a(3) images of words are good", bad_good == 0, std::to_string(bad_good) + " failures"});
        report({"yang-a(3) normalized words are divisible by h^|k|", bad_div == 0, std::to_string(bad_div) + " failures"});
    }
    {
        CheckResult res{"trig-a(3) divided powers e(i,r)^k/[k]! are good, k <= 4", true, ""};
        for (int i = 1; i <= 2 && res.passed; ++i)
            for (int r = -1; r <= 1 && res.passed; ++r)
                for (int k = 1; k <= 4 && res.passed; ++k) {
                    auto P = psi_word(a3, Word(k, {i, r}));
                    auto divided = P.numerator().divide_scalar(qfact(k));
                    if (!divided || !is_good(ShuffleElement(a3, P.grading(), *divided))) {
                        res.passed = false;
                        res.detail = "fails at i=" + std::to_string(i) + " r=" + std::to_string(r) +
                                     " k=" + std::to_string(k);
                    }
                }
        report(res);
    }
}

void degeneration_suite(const SuiteOptions& o, const Check& report) {
    int max_k = pick(o.max_k, 4);
    int trials = pick(o.trials, 50);
    Flavor tp = Flavor::two_param(3), a3 = Flavor::trig_a(3);
    auto [lo, hi] = window_for(tp, o, {-1, 1}, {0, 2});
    std::mt19937_64 rng(o.seed);
    auto agree = [&](const Word& w) { return degenerate_two_param(psi_word(tp, w)) == psi_word(a3, w); };
    std::vector<Word> words{{}};
    int exhaustive = std::min(max_k, 3);
    for (int len = 1; len <= exhaustive; ++len) {
        std::vector<Word> next;
        int bad = 0;
        for (const auto& w : words)
            for (int i = 1; i <= tp.rank(); ++i)
                for (int r = lo; r <= hi; ++r) {
                    Word x = w;
                    x.push_back({i, r});
                    if (!agree(x)) ++bad;
                    next.push_back(std::move(x));
                }
        report({"all words of length " + std::to_string(len) + " with modes in " + range(lo, hi), bad == 0,
                std::to_string(next.size()) + " words, " + std::to_string(bad) + " mismatches"});
        words = std::move(next);
    }
    for (int len = exhaustive + 1; len <= max_k; ++len) {
        int bad = 0;
        for (int t = 0; t < trials; ++t)
            if (!agree(random_word(rng, tp, len, lo, hi))) ++bad;
        report({std::to_string(trials) + " random words of length " + std::to_string(len), bad == 0,
                std::to_string(bad) + " mismatches"});
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"factorial", "combinatorial", "relations", "closure",
                                                "roundtrip", "integrality",   "two-param-degeneration"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options,
                                   const std::function<void(const CheckResult&)>& report) {
    std::vector<CheckResult> results;
    Check sink = [&](CheckResult r) {
        if (report) report(r);
        results.push_back(std::move(r));
    };
    if (name == "factorial")
        factorial_suite(options, sink);
    else if (name == "combinatorial")
        combinatorial_suite(options, sink);
    else if (name == "relations")
        relations_suite(options, sink);
    else if (name == "closure")
        closure_suite(options, sink);
    else if (name == "roundtrip")
        roundtrip_suite(options, sink);
    else if (name == "integrality")
        integrality_suite(options, sink);
    else if (name == "two-param-degeneration")
        degeneration_suite(options, sink);
    else
        throw InvalidInput("unknown suite " + name);
    return results;
}

std::vector<RelationInstance> relation_instances(const Flavor& flavor, int lo, int hi) {
    if (flavor.is_yangian() && lo < 0) throw InvalidInput("Yangian modes must be non-negative");
    std::vector<RelationInstance> out;
    if (flavor.is_yangian())
        quadratic_yangian(flavor, lo, hi, out);
    else
        quadratic_trig(flavor, lo, hi, out);
    commutation(flavor, lo, hi, out);
    serre(flavor, lo, hi, out);
    if (flavor.is_super()) quartic(flavor, lo, hi, out);
    return out;
}

XPoly combinatorial_residue(int k, bool yangian) {
    auto xs = [](int s) { return XPoly::var(xvar(1, s)); };
    XPoly shift = yangian ? XPoly(ParamPoly::param(0)) : XPoly();
    XPoly lhs;
    for (int i = 1; i <= k; ++i) {
        XPoly term(i % 2 == 1 ? 1 : -1);
        for (int j = 1; j <= k; ++j) {
            if (j == i) continue;
            term *= yangian ? xs(j) - xs(i) + shift : xs(j) - xs(i) * vp(-2);
        }
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b)
                if (a != i && b != i) term *= xs(b) - xs(a);
        lhs += term;
    }
    ParamPoly constant;
    for (int t = 0; t < k; ++t) constant += yangian ? ParamPoly(1) : vp(-2 * t);
    XPoly vandermonde(constant);
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) vandermonde *= xs(b) - xs(a);
    return lhs - vandermonde;
}

}  // namespace qsa
