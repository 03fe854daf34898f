#include "qsa/special.hpp"

#include <climits>
#include <functional>
#include <sstream>

#include "qsa/error.hpp"

namespace qsa {

namespace {

ParamPoly hbar() { return ParamPoly::param(0); }

// For the even kinds no color is odd; a sentinel past the rank makes the
// super exponent formulas reduce to the even ones.
int odd_color(const Flavor& flavor) { return flavor.is_super() ? flavor.m() : INT_MAX; }

}  // namespace

std::vector<int> plan_grading(const Flavor& flavor, const DegreeVector& d) {
    auto roots = positive_roots(flavor);
    if (d.size() != roots.size()) throw InvalidInput("degree vector has the wrong length");
    std::vector<int> g(flavor.rank(), 0);
    for (size_t b = 0; b < roots.size(); ++b) {
        if (d[b] < 0) throw InvalidInput("degree vectors are non-negative");
        for (int c = roots[b].j; c <= roots[b].i; ++c) g[c - 1] += d[b];
    }
    return g;
}

std::vector<DegreeVector> degree_vectors(const Flavor& flavor, const std::vector<int>& grading) {
    auto roots = positive_roots(flavor);
    if (static_cast<int>(grading.size()) != flavor.rank()) throw InvalidInput("grading has the wrong length");
    std::vector<DegreeVector> out;
    DegreeVector d(roots.size(), 0);
    std::vector<int> rest = grading;
    std::function<void(size_t)> walk = [&](size_t b) {
        if (b == roots.size()) {
            for (int r : rest)
                if (r != 0) return;
            out.push_back(d);
            return;
        }
        int cap = INT_MAX;
        for (int c = roots[b].j; c <= roots[b].i; ++c) cap = std::min(cap, rest[c - 1]);
        for (int k = 0; k <= cap; ++k) {
            d[b] = k;
            for (int c = roots[b].j; c <= roots[b].i; ++c) rest[c - 1] -= k;
            walk(b + 1);
            for (int c = roots[b].j; c <= roots[b].i; ++c) rest[c - 1] += k;
        }
        d[b] = 0;
    };
    walk(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return degree_less(a, b); });
    return out;
}

SpecPlan canonical_plan(const Flavor& flavor, const DegreeVector& d) {
    auto roots = positive_roots(flavor);
    plan_grading(flavor, d);
    SpecPlan plan;
    plan.d = d;
    std::vector<int> next(flavor.rank() + 1, 1);
    plan.assignment.resize(roots.size());
    for (size_t b = 0; b < roots.size(); ++b)
        for (int s = 0; s < d[b]; ++s) {
            std::vector<int> slots;
            for (int c = roots[b].j; c <= roots[b].i; ++c) slots.push_back(next[c]++);
            plan.assignment[b].push_back(std::move(slots));
        }
    return plan;
}

std::string degree_to_string(const Flavor& flavor, const DegreeVector& d) {
    auto roots = positive_roots(flavor);
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (size_t b = 0; b < roots.size() && b < d.size(); ++b) {
        if (d[b] == 0) continue;
        if (!first) os << ", ";
        first = false;
        os << roots[b].to_string() << "->" << d[b];
    }
    os << "}";
    return os.str();
}

int spec_exponent(const Flavor& flavor, int color) {
    if (flavor.is_super() && color > flavor.m()) return color - 2 * flavor.m();
    return -color;
}

XPoly spec_image(const Flavor& flavor, int color, const VarId& y) {
    int a = spec_exponent(flavor, color);
    if (flavor.is_yangian()) return XPoly::var(y) + XPoly(hbar() * make_rational(a, 2));
    return XPoly::var(y) * flavor.base().pow(a);
}

XPoly phi(const ShuffleElement& F, const SpecPlan& plan) {
    const Flavor& flavor = F.flavor();
    auto roots = positive_roots(flavor);
    if (plan_grading(flavor, plan.d) != F.grading())
        throw InvalidInput("degree vector " + degree_to_string(flavor, plan.d) + " does not match the grading");
    SpecPlan canon;
    const SpecPlan* use = &plan;
    if (plan.assignment.empty()) {
        canon = canonical_plan(flavor, plan.d);
        use = &canon;
    }
    if (use->assignment.size() != roots.size()) throw InvalidInput("assignment has the wrong number of roots");
    std::map<VarId, XPoly> images;
    for (size_t b = 0; b < roots.size(); ++b) {
        const auto& copies = use->assignment[b];
        if (static_cast<int>(copies.size()) != plan.d[b]) throw InvalidInput("assignment does not match d");
        for (size_t s = 0; s < copies.size(); ++s) {
            if (static_cast<int>(copies[s].size()) != roots[b].length())
                throw InvalidInput("assignment copy has the wrong number of slots");
            VarId y = yvar(static_cast<int>(b) + 1, static_cast<int>(s) + 1);
            for (int c = roots[b].j; c <= roots[b].i; ++c) {
                int slot = copies[s][c - roots[b].j];
                if (slot < 1 || slot > F.grading()[c - 1]) throw InvalidInput("assignment slot out of range");
                auto [it, fresh] = images.emplace(xvar(c, slot), spec_image(flavor, c, y));
                if (!fresh) throw InvalidInput("assignment uses a slot twice");
            }
        }
    }
    return substitute(F.numerator(), images);
}

XPoly phi(const ShuffleElement& F, const DegreeVector& d) { return phi(F, canonical_plan(F.flavor(), d)); }

XPoly linear_factor(const Flavor& flavor, const LinearFactor& f) {
    if (flavor.is_yangian()) return XPoly::var(f.a) - XPoly::var(f.b) - XPoly(hbar() * make_rational(f.shift, 2));
    return XPoly::var(f.a) - XPoly::var(f.b) * flavor.base().pow(f.shift);
}

std::optional<XPoly> divide_by(const Flavor& flavor, const XPoly& p, const LinearFactor& f) {
    XPoly rest = flavor.is_yangian() ? XPoly::var(f.b) + XPoly(hbar() * make_rational(f.shift, 2))
                                     : XPoly::var(f.b) * flavor.base().pow(f.shift);
    return p.divide_linear(encode(f.a), rest);
}

GFactors g_factors(const Flavor& flavor, const DegreeVector& d) {
    auto roots = positive_roots(flavor);
    plan_grading(flavor, d);
    const int m = odd_color(flavor);
    GFactors g;
    auto y = [](size_t b, int s) { return yvar(static_cast<int>(b) + 1, s); };
    for (size_t b = 0; b < roots.size(); ++b) {
        if (d[b] == 0) continue;
        const Root& beta = roots[b];
        for (size_t bb = b + 1; bb < roots.size(); ++bb) {
            if (d[bb] == 0) continue;
            const Root& other = roots[bb];
            int minus = 0, plus = 0;
            for (int j = beta.j; j <= beta.i; ++j)
                for (int jj = other.j; jj <= other.i; ++jj) {
                    if (j == jj && j < m) ++minus;
                    if (j == jj && j > m) ++plus;
                    if (j == jj + 1 && j > m) ++minus;
                    if (j == jj + 1 && j <= m) ++plus;
                }
            int equal = (other.j > beta.j && other.contains(beta.i + 1)) ? 1 : 0;
            if (beta.contains(m) && other.contains(m)) ++equal;
            for (int s = 1; s <= d[b]; ++s)
                for (int ss = 1; ss <= d[bb]; ++ss) {
                    if (minus) g.linear.push_back({y(b, s), y(bb, ss), -2, minus});
                    if (plus) g.linear.push_back({y(b, s), y(bb, ss), 2, plus});
                    if (equal) g.linear.push_back({y(b, s), y(bb, ss), 0, equal});
                }
        }
        int len = beta.i - beta.j;
        if (len == 0) continue;
        ParamPoly unit = flavor.is_yangian() ? -hbar() : ParamPoly(1) - flavor.base().pow(2);
        g.constant *= unit.pow(d[b] * len);
        for (int s = 1; s <= d[b]; ++s) {
            for (int ss = 1; ss <= d[b]; ++ss)
                if (s != ss) g.linear.push_back({y(b, s), y(b, ss), 2, len});
            if (!flavor.is_yangian()) g.monomial *= XPoly::var(y(b, s), len);
        }
    }
    return g;
}

XPoly g_product(const Flavor& flavor, const GFactors& g) {
    XPoly out = g.monomial * g.constant;
    for (const auto& f : g.linear) out *= linear_factor(flavor, f).pow(f.exponent);
    return out;
}

std::optional<XPoly> divide_by(const Flavor& flavor, const XPoly& p, const GFactors& g) {
    auto q = p.divide_scalar(g.constant);
    if (!q) return std::nullopt;
    XPoly cur = *q;
    if (!g.monomial.is_zero() && !(g.monomial == XPoly(1))) cur = cur * g.monomial.pow(-1);
    for (const auto& f : g.linear)
        for (int e = 0; e < f.exponent; ++e) {
            auto next = divide_by(flavor, cur, f);
            if (!next) return std::nullopt;
            cur = std::move(*next);
        }
    return cur;
}

XPoly reduced_phi(const ShuffleElement& F, const DegreeVector& d, bool printed_b) {
    const Flavor& flavor = F.flavor();
    if (flavor.kind() != Kind::TrigA) throw NotImplemented("reduced_phi is only defined for trig-a");
    auto roots = positive_roots(flavor);
    XPoly cur = phi(F, d);
    int total = 0;
    for (int k : F.grading()) total += k;
    auto q = cur.divide_scalar(flavor.normalizer().pow(total));
    if (!q) throw DivisionFailure("phi_d" + degree_to_string(flavor, d) + " is not divisible by (v-v^-1)^" +
                                  std::to_string(total));
    cur = std::move(*q);
    for (size_t b = 0; b < roots.size(); ++b)
        for (int s = 1; s <= d[b]; ++s)
            for (size_t bb = b; bb < roots.size(); ++bb)
                for (int ss = (bb == b ? s + 1 : 1); ss <= d[bb]; ++ss) {
                    int same = 0, shifted = 0;
                    for (int j = roots[b].j; j <= roots[b].i; ++j)
                        for (int jj = roots[bb].j; jj <= roots[bb].i; ++jj) {
                            if (j == jj) ++same;
                            if (j == jj + 1) ++shifted;
                        }
                    if (bb == b) --same;
                    VarId ya = yvar(static_cast<int>(b) + 1, s), yb = yvar(static_cast<int>(bb) + 1, ss);
                    std::vector<LinearFactor> factors{{ya, yb, -2, same}, {ya, yb, printed_b ? -2 : 2, shifted}};
                    for (const auto& f : factors)
                        for (int e = 0; e < f.exponent; ++e) {
                            auto next = divide_by(flavor, cur, f);
                            if (!next)
                                throw DivisionFailure("phi_d" + degree_to_string(flavor, d) + " is not divisible by " +
                                                      linear_factor(flavor, f).to_string());
                            cur = std::move(*next);
                        }
                }
    // The quotient must be symmetric in each group y_{beta,.}.
    for (size_t b = 0; b < roots.size(); ++b)
        if (d[b] > 1 && !is_symmetric_in(cur, 'y', static_cast<int>(b) + 1, d[b]))
            throw InternalError("reduced specialization is not symmetric in the copies of " + roots[b].to_string());
    return cur;
}

XPoly vertical_specialize(const XPoly& K, const Flavor& flavor, const SpecPlan& plan) {
    auto roots = positive_roots(flavor);
    std::map<VarCode, XPoly> images;
    for (size_t b = 0; b < roots.size(); ++b) {
        int total = 0;
        std::vector<int> groups = b < plan.t.size() ? plan.t[b] : std::vector<int>{};
        if (groups.empty()) groups.assign(plan.d[b], 1);
        int s = 1;
        for (size_t g = 0; g < groups.size(); ++g) {
            if (groups[g] <= 0) throw InvalidInput("compositions must have positive parts");
            total += groups[g];
            for (int k = 1; k <= groups[g]; ++k, ++s)
                images[encode(yvar(static_cast<int>(b) + 1, s))] =
                    XPoly::var(zvar(static_cast<int>(b) + 1, static_cast<int>(g) + 1)) * flavor.base().pow(-2 * k);
        }
        if (total != plan.d[b]) throw InvalidInput("composition of " + roots[b].to_string() + " does not sum to d");
    }
    return K.substitute(images);
}

XPoly cross_specialize(const ShuffleElement& F, const SpecPlan& plan, bool printed_b) {
    return vertical_specialize(reduced_phi(F, plan.d, printed_b), F.flavor(), plan);
}

RankOneModel rank_one_model(const Flavor& flavor, const Root& root) {
    switch (flavor.kind()) {
        case Kind::TrigA: return {Flavor::trig_a(2), 1, "trig-sym-minus"};
        case Kind::TrigTwoParam: return {Flavor::two_param(2), 1, "trig-2p"};
        case Kind::YangA: return {Flavor::yang_a(2), 1, "yang-sym"};
        case Kind::TrigSuper:
        case Kind::YangSuper: break;
    }
    bool yang = flavor.is_yangian();
    int m = flavor.m();
    if (root.contains(m))
        return yang ? RankOneModel{Flavor::yang_super(1, 1), 1, "yang-skew"}
                    : RankOneModel{Flavor::trig_super(1, 1), 1, "skew"};
    if (m > root.i)
        return yang ? RankOneModel{Flavor::yang_a(2), 1, "yang-sym"} : RankOneModel{Flavor::trig_a(2), 1, "trig-sym-minus"};
    return yang ? RankOneModel{Flavor::yang_super(1, 2), 2, "yang-sym-plus"}
                : RankOneModel{Flavor::trig_super(1, 2), 2, "trig-sym-plus"};
}

XPoly rank_one_product(const RankOneModel& model, const std::vector<int>& modes, int root_index) {
    ShuffleElement acc = ShuffleElement::unit(model.flavor);
    for (int r : modes) acc = shuffle_product(acc, ShuffleElement::generator(model.flavor, model.color, r));
    std::map<VarCode, VarCode> rename;
    for (size_t s = 1; s <= modes.size(); ++s)
        rename[encode(xvar(model.color, static_cast<int>(s)))] = encode(yvar(root_index, static_cast<int>(s)));
    return acc.numerator().relabel(rename);
}

std::vector<std::vector<int>> compositions(int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) return {{}};
    for (int first = 1; first <= k; ++first)
        for (auto rest : compositions(k - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

}  // namespace qsa
