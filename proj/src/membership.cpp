#include "qsa/membership.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

#include "qsa/error.hpp"

namespace qsa {

namespace {

// Exact division of both by their common factor.
void reduce_scale(XPoly& cur, ParamPoly& scale) {
    if (cur.is_zero()) {
        scale = ParamPoly(1);
        return;
    }
    ParamPoly g = gcd(cur.content(), scale);
    if (g.is_constant()) return;
    cur = *cur.divide_scalar(g);
    scale = *divide_exact(scale, g);
}

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly g = gcd(a, b);
    return *divide_exact(a * b, g);
}

ExponentTuple sorted_exponents(const Mono& m, char ns, int color, int k) {
    ExponentTuple t(k);
    for (int s = 1; s <= k; ++s) t[s - 1] = m.exponent(encode(VarId{ns, color, s}));
    std::sort(t.begin(), t.end());
    return t;
}

Mono representative(char ns, int color, const ExponentTuple& t) {
    Mono m;
    for (size_t s = 0; s < t.size(); ++s) m.set(encode(VarId{ns, color, static_cast<int>(s) + 1}), t[s]);
    return m;
}

// Block keys for the tensor decomposition: one sorted tuple per root used.
using BlockKey = std::vector<ExponentTuple>;

bool block_less(const BlockKey& a, const BlockKey& b) {
    for (size_t k = 0; k < a.size(); ++k) {
        if (tuple_less(a[k], b[k])) return true;
        if (tuple_less(b[k], a[k])) return false;
    }
    return false;
}

struct Blocks {
    std::vector<int> roots;  // 1-based root indices with d > 0
    std::vector<int> sizes;

    BlockKey key(const Mono& m) const {
        BlockKey out;
        for (size_t k = 0; k < roots.size(); ++k) out.push_back(sorted_exponents(m, 'y', roots[k], sizes[k]));
        return out;
    }
    Mono mono(const BlockKey& key) const {
        Mono m;
        for (size_t k = 0; k < roots.size(); ++k) m *= representative('y', roots[k], key[k]);
        return m;
    }
    std::optional<BlockKey> leading(const XPoly& p) const {
        std::optional<BlockKey> best;
        for (const auto& [m, c] : p.terms()) {
            BlockKey k = key(m);
            if (!best || block_less(*best, k)) best = std::move(k);
        }
        return best;
    }
};

std::optional<ExponentTuple> leading_tuple(const XPoly& p, int color, int k) {
    std::optional<ExponentTuple> best;
    for (const auto& [m, c] : p.terms()) {
        ExponentTuple t = sorted_exponents(m, 'x', color, k);
        if (!best || tuple_less(*best, t)) best = std::move(t);
    }
    return best;
}

std::string tuple_string(const ExponentTuple& t) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
    os << ")";
    return os.str();
}

}  // namespace

// ------------------------------------------------------------ rank one

RankOneModel rank_one_kernel(const std::string& name) {
    if (name == "trig-sym-minus") return {Flavor::trig_a(2), 1, name};
    if (name == "trig-sym-plus") return {Flavor::trig_super(1, 2), 2, name};
    if (name == "skew") return {Flavor::trig_super(1, 1), 1, name};
    if (name == "yang-sym") return {Flavor::yang_a(2), 1, name};
    if (name == "trig-2p") return {Flavor::two_param(2), 1, name};
    if (name == "yang-sym-plus") return {Flavor::yang_super(1, 2), 2, name};
    if (name == "yang-skew") return {Flavor::yang_super(1, 1), 1, name};
    throw InvalidInput("unknown rank-one kernel '" + name + "'");
}

std::vector<RankOneTerm> decompose_rank1(const XPoly& f, int k, const RankOneModel& kernel) {
    const int color = kernel.color;
    const bool skew = kernel.flavor.is_skew(color);
    XPoly cur = f;
    if (color != 1) {
        std::map<VarCode, VarCode> rename;
        for (int s = 1; s <= k; ++s) rename[encode(xvar(1, s))] = encode(xvar(color, s));
        cur = cur.relabel(rename);
    }
    for (VarCode c : cur.variables()) {
        VarId id = decode(c);
        if (id.ns != 'x' || id.color != color || id.slot < 1 || id.slot > k)
            throw InvalidInput("rank-one input may only use x_{1,1.." + std::to_string(k) + "}");
    }
    if (!is_symmetric_in(cur, 'x', color, k, skew))
        throw InvalidInput(std::string("rank-one input is not ") + (skew ? "skew-symmetric" : "symmetric"));

    std::vector<RankOneTerm> out;
    ParamPoly scale(1);
    std::optional<ExponentTuple> prev;
    for (int step = 0; !cur.is_zero(); ++step) {
        if (step > 100000) throw InternalError("rank-one peeling does not terminate");
        ExponentTuple lead = *leading_tuple(cur, color, k);
        if (prev && !tuple_less(lead, *prev))
            throw InternalError("rank-one peeling did not lower the leading tuple " + tuple_string(lead));
        prev = lead;
        if (skew && std::adjacent_find(lead.begin(), lead.end()) != lead.end())
            throw InvalidInput("skew input has a repeated exponent " + tuple_string(lead));
        ShuffleElement prod = ShuffleElement::unit(kernel.flavor);
        for (int r : lead) prod = shuffle_product(prod, ShuffleElement::generator(kernel.flavor, color, r));
        const XPoly& P = prod.numerator();
        Mono m = representative('x', color, lead);
        ParamPoly cp = P.coefficient(m);
        if (cp.is_zero()) throw InternalError("rank-one product lost its leading term " + tuple_string(lead));
        ParamFrac c(cur.coefficient(m), scale * cp);
        out.push_back({lead, c});
        cur = cur * c.den() - P * (c.num() * scale);
        scale *= c.den();
        reduce_scale(cur, scale);
    }
    return out;
}

// ------------------------------------------------------------ PBWD

std::pair<ShuffleElement, ParamPoly> reconstruct(const Flavor& flavor, const std::vector<int>& grading,
                                                 const Decomposition& dec) {
    ParamPoly L(1);
    for (const auto& e : dec.entries) L = lcm(L, e.coeff.den());
    PbwdEvaluator eval(dec.choice);
    ShuffleElement acc = ShuffleElement::zero(flavor, grading);
    for (const auto& e : dec.entries) {
        ParamPoly scaled = *divide_exact(e.coeff.num() * L, e.coeff.den());
        acc += eval.monomial(e.monomial) * scaled;
    }
    return {acc, L};
}

Decomposition decompose(const ShuffleElement& F, const PbwdChoice& choice, const DecomposeOptions& options) {
    const Flavor& flavor = F.flavor();
    if (!(choice.flavor() == flavor)) throw FlavorMismatch("choice belongs to another flavor");
    Decomposition dec{choice, {}};
    if (F.is_zero()) return dec;

    auto roots = positive_roots(flavor);
    PbwdEvaluator eval(choice);
    std::map<PbwdMonomial, ParamFrac> found;

    // y-degree of a single root element beyond its mode.
    std::map<int, int> shift;
    auto root_shift = [&](size_t b) {
        auto it = shift.find(static_cast<int>(b));
        if (it != shift.end()) return it->second;
        DegreeVector unit(roots.size(), 0);
        unit[b] = 1;
        auto g = g_factors(flavor, unit);
        for (int r0 = 0; r0 <= 4; ++r0) {
            PbwdMonomial h;
            h.add(roots[b], r0);
            std::optional<XPoly> q;
            try {
                q = divide_by(flavor, phi(eval.monomial(h), unit), g);
            } catch (const InvalidInput&) {
                continue;
            }
            if (!q || q->is_zero()) throw InternalError("root element of " + roots[b].to_string() + " does not factor");
            int top = INT_MIN;
            for (const auto& [m, c] : q->terms()) top = std::max(top, m.exponent(encode(yvar(static_cast<int>(b) + 1, 1))));
            return shift[static_cast<int>(b)] = top - r0;
        }
        throw InvalidInput("no valid mode for the root element of " + roots[b].to_string());
    };

    XPoly cur = F.numerator();
    ParamPoly scale(1);
    auto degrees = degree_vectors(flavor, F.grading());
    int steps = 0;
    for (auto dit = degrees.rbegin(); dit != degrees.rend(); ++dit) {
        const DegreeVector& d = *dit;
        ShuffleElement current(flavor, F.grading(), cur);
        XPoly R = phi(current, d);
        if (R.is_zero()) continue;
        GFactors g = g_factors(flavor, d);
        auto G0 = divide_by(flavor, R, g);
        if (!G0)
            throw DivisionFailure("specialization at d=" + degree_to_string(flavor, d) +
                                  " is not divisible by the G-factors; the element violates the wheel conditions");
        Blocks blocks;
        for (size_t b = 0; b < roots.size(); ++b)
            if (d[b] > 0) {
                blocks.roots.push_back(static_cast<int>(b) + 1);
                blocks.sizes.push_back(d[b]);
            }
        XPoly G = std::move(*G0);
        ParamPoly gscale = scale;
        std::vector<std::pair<PbwdMonomial, ParamFrac>> level;
        std::optional<BlockKey> prev;
        while (!G.is_zero()) {
            if (++steps > options.max_steps) throw GuardExceeded("decomposition exceeded its step limit");
            BlockKey lead = *blocks.leading(G);
            if (prev && !block_less(lead, *prev))
                throw InternalError("peeling at d=" + degree_to_string(flavor, d) + " did not lower the leading term");
            prev = lead;
            PbwdMonomial h;
            for (size_t k = 0; k < blocks.roots.size(); ++k) {
                size_t b = blocks.roots[k] - 1;
                for (int e : lead[k]) h.add(roots[b], e - root_shift(b));
            }
            h.validate(flavor);
            auto Q = divide_by(flavor, phi(eval.monomial(h), d), g);
            if (!Q) throw InternalError("ordered monomial " + h.to_string() + " does not factor");
            Mono m = blocks.mono(lead);
            ParamPoly cq = Q->coefficient(m);
            auto qlead = blocks.leading(*Q);
            if (cq.is_zero() || !qlead || *qlead != lead)
                throw InternalError("ordered monomial " + h.to_string() + " has an unexpected leading term");
            ParamFrac c(G.coefficient(m), gscale * cq);
            level.emplace_back(h, c);
            G = G * c.den() - *Q * (c.num() * gscale);
            gscale *= c.den();
            reduce_scale(G, gscale);
        }
        // Subtract the level from the running remainder cur / scale.
        ParamPoly L(1);
        for (const auto& [h, c] : level) L = lcm(L, c.den());
        XPoly next = cur * L;
        for (const auto& [h, c] : level) {
            ParamPoly k = *divide_exact(c.num() * L, c.den());
            next -= eval.monomial(h).numerator() * (k * scale);
        }
        cur = std::move(next);
        scale *= L;
        reduce_scale(cur, scale);
        for (const auto& [h, c] : level) {
            auto [it, fresh] = found.emplace(h, c);
            if (!fresh) it->second += c;
        }
        if (!phi(ShuffleElement(flavor, F.grading(), cur), d).is_zero())
            throw InternalError("remainder still specializes nontrivially at d=" + degree_to_string(flavor, d));
    }
    if (!cur.is_zero()) throw InternalError("remainder is nonzero after the minimal degree vector");

    for (auto& [h, c] : found)
        if (!c.is_zero()) dec.entries.push_back({h, c});
    if (options.verify) {
        auto [value, den] = reconstruct(flavor, F.grading(), dec);
        if (!(value == F * den)) throw InternalError("decomposition does not reconstruct the input");
    }
    return dec;
}

// ------------------------------------------------------------ predicates

namespace {

// Laurent divisibility for the trigonometric kinds; h-adic for the rational ones.
bool divisible(const Flavor& flavor, const XPoly& p, const ParamPoly& d) {
    auto q = p.divide_scalar(d);
    if (!q) return false;
    if (!flavor.is_yangian()) return true;
    for (const auto& [m, c] : q->terms())
        if (m.params()[0] < 0) return false;
    return true;
}

int total_size(const std::vector<int>& grading) {
    int total = 0;
    for (int k : grading) total += k;
    return total;
}

// Cartesian product of the compositions of each d_beta.
void for_each_t(const DegreeVector& d, const std::function<bool(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<std::vector<int>>> options;
    for (int k : d) options.push_back(k == 0 ? std::vector<std::vector<int>>{{}} : compositions(k));
    std::vector<std::vector<int>> pick(d.size());
    std::function<bool(size_t)> walk = [&](size_t b) {
        if (b == d.size()) return fn(pick);
        for (const auto& c : options[b]) {
            pick[b] = c;
            if (!walk(b + 1)) return false;
        }
        return true;
    };
    walk(0);
}

std::string t_string(const Flavor& flavor, const std::vector<std::vector<int>>& t) {
    auto roots = positive_roots(flavor);
    std::ostringstream os;
    bool first = true;
    for (size_t b = 0; b < t.size(); ++b) {
        if (t[b].empty()) continue;
        os << (first ? "" : ", ") << roots[b].to_string() << ":(";
        first = false;
        for (size_t k = 0; k < t[b].size(); ++k) os << (k ? "," : "") << t[b][k];
        os << ")";
    }
    return os.str();
}

}  // namespace

PredicateReport integrality_report(const ShuffleElement& F) {
    const Flavor& flavor = F.flavor();
    const int total = total_size(F.grading());
    switch (flavor.kind()) {
        case Kind::TrigA: break;
        case Kind::YangA:
        case Kind::YangSuper: {
            if (divisible(flavor, F.numerator(), flavor.normalizer().pow(total))) return {};
            return {false, "numerator is not divisible by h^" + std::to_string(total)};
        }
        case Kind::TrigTwoParam:
        case Kind::TrigSuper: return basis_integrality_report(F, PbwdChoice(flavor));
    }
    if (!F.numerator().divide_scalar(flavor.normalizer().pow(total)))
        return {false, "numerator is not divisible by (v-v^-1)^" + std::to_string(total)};
    PredicateReport report;
    for (const auto& d : degree_vectors(flavor, F.grading())) {
        XPoly K = reduced_phi(F, d);
        for_each_t(d, [&](const std::vector<std::vector<int>>& t) {
            SpecPlan plan{d, {}, t};
            XPoly U = vertical_specialize(K, flavor, plan);
            ParamPoly divisor(1);
            std::string name;
            for (const auto& part : t)
                for (int ti : part) {
                    divisor *= qfact(ti);
                    if (ti > 1) name += (name.empty() ? "" : "*") + ("[" + std::to_string(ti) + "]_v!");
                }
            if (U.divide_scalar(divisor)) return true;
            report = {false, "d=" + degree_to_string(flavor, d) + ", t=" + t_string(flavor, t) +
                                 ", failing divisor " + (name.empty() ? "1" : name)};
            return false;
        });
        if (!report.holds) return report;
    }
    return report;
}

bool is_integral(const ShuffleElement& F) { return integrality_report(F).holds; }

PredicateReport goodness_report(const ShuffleElement& F) {
    const Flavor& flavor = F.flavor();
    if (flavor.kind() == Kind::TrigTwoParam || flavor.kind() == Kind::TrigSuper)
        throw NotImplemented("the good predicate is defined for trig-a, yang-a and yang-super");
    auto roots = positive_roots(flavor);
    for (const auto& d : degree_vectors(flavor, F.grading())) {
        int power = 0;
        for (size_t b = 0; b < roots.size(); ++b) power += d[b] * (roots[b].i - roots[b].j);
        if (power == 0) continue;
        if (!divisible(flavor, phi(F, d), flavor.normalizer().pow(power)))
            return {false, "phi at d=" + degree_to_string(flavor, d) + " is not divisible by " +
                               flavor.normalizer().to_string(flavor.params()) + " to the power " +
                               std::to_string(power)};
    }
    return {};
}

bool is_good(const ShuffleElement& F) { return goodness_report(F).holds; }

PredicateReport basis_integrality_report(const ShuffleElement& F, const PbwdChoice& choice) {
    const Flavor& flavor = F.flavor();
    Decomposition dec = decompose(F, choice);
    for (const auto& e : dec.entries) {
        ParamFrac c = e.coeff / ParamFrac(flavor.normalizer().pow(e.monomial.size()));
        bool ok = c.is_laurent() && (!flavor.is_yangian() || c.num().is_polynomial());
        if (!ok)
            return {false, "coefficient of " + e.monomial.to_string() + " over the normalized basis is " +
                               c.to_string(flavor.params())};
    }
    return {};
}

bool is_integral_by_basis(const ShuffleElement& F, const PbwdChoice& choice) {
    return basis_integrality_report(F, choice).holds;
}

// ------------------------------------------------------------ independence

namespace {

Rational eval_param(const ParamPoly& p, const Rational& a, const Rational& b) {
    auto power = [](const Rational& base, int e) {
        Rational out = 1;
        for (int k = 0; k < std::abs(e); ++k) out *= base;
        return e < 0 ? Rational(1 / out) : out;
    };
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) total += c * power(a, e[0]) * power(b, e[1]);
    return total;
}

int rank_of(std::vector<std::vector<Rational>> rows, int cols) {
    using T = Rational;
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!(rows[r][col] == T(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        T inv = T(1) / rows[rank][col];
        for (int c = col; c < cols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == T(0)) continue;
            T f = rows[r][col];
            for (int c = col; c < cols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

IndependenceReport independence_certificate(const Flavor& flavor, const std::vector<int>& grading, int lo, int hi,
                                            const PbwdChoice& choice) {
    if (lo > hi) throw InvalidInput("empty mode window");
    IndependenceReport report;
    report.basis = enumerate_monomials(flavor, grading, lo, hi);
    report.monomials = static_cast<int>(report.basis.size());
    if (static_cast<std::uint64_t>(report.monomials) > symmetrization_guard())
        throw GuardExceeded(std::to_string(report.monomials) + " monomials exceed the guard");
    PbwdEvaluator eval(choice);
    std::map<Mono, int> row_of;
    std::vector<const XPoly*> columns;
    for (const auto& h : report.basis) {
        const XPoly& f = eval.monomial(h).numerator();
        columns.push_back(&f);
        for (const auto& [m, c] : f.coefficients()) row_of.emplace(m, 0);
    }
    int next = 0;
    for (auto& [m, r] : row_of) r = next++;
    report.rows = next;
    const int cols = report.monomials;
    if (cols == 0) {
        report.independent = true;
        report.method = "empty";
        return report;
    }

    // A specialization of the parameters with full column rank certifies
    // full rank over the fraction field.
    const std::vector<std::pair<Rational, Rational>> points{
        {make_rational(3, 2), make_rational(5, 7)}, {make_rational(7, 3), make_rational(2, 9)}, {Rational(5), make_rational(11, 4)}};
    for (const auto& [a, b] : points) {
        std::vector<std::vector<Rational>> rows(report.rows, std::vector<Rational>(cols, Rational(0)));
        for (int c = 0; c < cols; ++c)
            for (const auto& [m, p] : columns[c]->coefficients()) rows[row_of[m]][c] = eval_param(p, a, b);
        int rank = rank_of(rows, cols);
        if (rank == cols) {
            report.rank = rank;
            report.independent = true;
            std::ostringstream os;
            os << "full rank after specializing the parameters to (" << a << ", " << b << ")";
            report.method = os.str();
            return report;
        }
    }

    // Exact elimination over the fraction field, returning a kernel vector.
    std::vector<std::vector<ParamFrac>> rows(report.rows, std::vector<ParamFrac>(cols, ParamFrac(0)));
    for (int c = 0; c < cols; ++c)
        for (const auto& [m, p] : columns[c]->coefficients()) rows[row_of[m]][c] = ParamFrac(p);
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < cols && rank < report.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < report.rows; ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        ParamFrac inv = ParamFrac(1) / rows[rank][col];
        for (int c = col; c < cols; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < report.rows; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            ParamFrac f = rows[r][col];
            for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    report.rank = rank;
    report.method = "exact elimination over the fraction field";
    report.independent = rank == cols;
    if (!report.independent) {
        int free = 0;
        while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
        report.kernel.assign(cols, ParamFrac(0));
        report.kernel[free] = ParamFrac(1);
        for (size_t k = 0; k < pivots.size(); ++k) report.kernel[pivots[k]] = -rows[k][free];
    }
    return report;
}

}  // namespace qsa
