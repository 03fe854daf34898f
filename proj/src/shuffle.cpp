#include "qsa/shuffle.hpp"

#include <algorithm>
#include <numeric>

#include "qsa/error.hpp"

namespace qsa {

namespace {

ParamPoly v_pow(int k) { return ParamPoly::param(0, k); }
ParamPoly q_pow(int k) { return ParamPoly::monomial({k, -k}); }
ParamPoly half_h(int k) { return ParamPoly::param(0) * make_rational(k, 2); }

XPoly x_of(int color, int slot) { return XPoly::var(xvar(color, slot)); }

// k-element subsets of {1..n}, each sorted, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - k + pos + 1) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int t = pos + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

std::vector<int> complement(const std::vector<int>& a, int n) {
    std::vector<int> out;
    size_t p = 0;
    for (int s = 1; s <= n; ++s) {
        if (p < a.size() && a[p] == s) {
            ++p;
        } else {
            out.push_back(s);
        }
    }
    return out;
}

XPoly vandermonde(int color, const std::vector<int>& slots) {
    XPoly out(1);
    for (size_t p = 0; p < slots.size(); ++p)
        for (size_t q = p + 1; q < slots.size(); ++q) out *= x_of(color, slots[p]) - x_of(color, slots[q]);
    return out;
}

int inversions(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    for (int p : a)
        for (int q : b)
            if (p > q) ++count;
    return count;
}

Rational factorial(int n) {
    Rational out = 1;
    for (int t = 2; t <= n; ++t) out *= t;
    return out;
}

}  // namespace

// -------------------------------------------------------------------- Zeta

XPoly Zeta::numerator(const XPoly& xa, const XPoly& xb, bool additive) const {
    XPoly body = additive ? xa - xb - XPoly(shift) : xa - xb * XPoly(shift);
    return scale == ParamPoly(1) ? body : body * scale;
}

// ------------------------------------------------------------------ Flavor

Flavor::Flavor(Kind kind, int m, int n) : kind_(kind), m_(m), n_(n) {}

Flavor Flavor::trig_a(int n) {
    if (n < 2) throw InvalidInput("sl_n needs n >= 2");
    return Flavor(Kind::TrigA, 0, n);
}

Flavor Flavor::two_param(int n) {
    if (n < 2) throw InvalidInput("sl_n needs n >= 2");
    return Flavor(Kind::TrigTwoParam, 0, n);
}

Flavor Flavor::trig_super(int m, int n) {
    if (m < 1 || n < 1) throw InvalidInput("sl(m|n) needs m, n >= 1");
    return Flavor(Kind::TrigSuper, m, n);
}

Flavor Flavor::yang_a(int n) {
    if (n < 2) throw InvalidInput("sl_n needs n >= 2");
    return Flavor(Kind::YangA, 0, n);
}

Flavor Flavor::yang_super(int m, int n) {
    if (m < 1 || n < 1) throw InvalidInput("sl(m|n) needs m, n >= 1");
    return Flavor(Kind::YangSuper, m, n);
}

ParamSet Flavor::params() const {
    if (is_yangian()) return ParamSet::H;
    if (kind_ == Kind::TrigTwoParam) return ParamSet::U;
    return ParamSet::V;
}

std::optional<int> Flavor::skew_color() const {
    if (is_super()) return m_;
    return std::nullopt;
}

void Flavor::check_color(int i) const {
    if (i < 1 || i > rank())
        throw InvalidInput("color " + std::to_string(i) + " out of range for " + to_string());
}

int Flavor::cartan(int i, int j) const {
    check_color(i);
    check_color(j);
    if (!is_super()) {
        if (i == j) return 2;
        return std::abs(i - j) == 1 ? -1 : 0;
    }
    if (i == j) return i < m_ ? 2 : (i == m_ ? 0 : -2);
    if (j == i + 1) return i < m_ ? -1 : 1;
    if (j == i - 1) return i <= m_ ? -1 : 1;
    return 0;
}

Zeta Flavor::zeta(int i, int j) const {
    int c = cartan(i, j);
    Zeta z;
    if (c == 0 && !(kind_ == Kind::TrigTwoParam && i == j)) return z;
    z.trivial = false;
    switch (kind_) {
        case Kind::TrigA:
        case Kind::TrigSuper: z.shift = v_pow(-c); break;
        case Kind::TrigTwoParam:
            if (i == j) {
                z.shift = q_pow(-2);
            } else {
                z.shift = q_pow(1);
                if (j == i + 1) z.scale = ParamPoly::monomial({1, 1});
            }
            break;
        case Kind::YangA:
        case Kind::YangSuper: z.shift = half_h(-c); break;
    }
    return z;
}

std::pair<XPoly, XPoly> Flavor::zeta_function(int i, int j) const {
    Zeta z = zeta(i, j);
    XPoly t = XPoly::var(tvar());
    if (z.trivial) return {XPoly(1), XPoly(1)};
    if (is_yangian()) return {t - XPoly(z.shift), t};
    return {(t - XPoly(z.shift)) * z.scale, t - XPoly(1)};
}

ParamPoly Flavor::base() const {
    switch (params()) {
        case ParamSet::V: return v_pow(1);
        case ParamSet::U: return q_pow(1);
        case ParamSet::H: break;
    }
    throw FlavorMismatch("rational kinds have no multiplicative base");
}

ParamPoly Flavor::normalizer() const {
    switch (params()) {
        case ParamSet::V: return v_pow(1) - v_pow(-1);
        case ParamSet::U: return q_pow(1) - q_pow(-1);
        case ParamSet::H: return ParamPoly::param(0);
    }
    throw InternalError("unknown parameter set");
}

ParamPoly Flavor::color_base(int k) const {
    if (is_super() && k > m_) return v_pow(-1);
    return base();
}

std::string Flavor::kind_name() const {
    switch (kind_) {
        case Kind::TrigA: return "trig-a";
        case Kind::TrigTwoParam: return "trig-2p";
        case Kind::TrigSuper: return "trig-super";
        case Kind::YangA: return "yang-a";
        case Kind::YangSuper: return "yang-super";
    }
    return "?";
}

std::string Flavor::to_string() const {
    if (is_super()) return kind_name() + "(" + std::to_string(m_) + "|" + std::to_string(n_) + ")";
    return kind_name() + "(" + std::to_string(n_) + ")";
}

Kind parse_kind(const std::string& name) {
    if (name == "trig-a") return Kind::TrigA;
    if (name == "trig-2p") return Kind::TrigTwoParam;
    if (name == "trig-super") return Kind::TrigSuper;
    if (name == "yang-a") return Kind::YangA;
    if (name == "yang-super") return Kind::YangSuper;
    throw InvalidInput("unknown flavor '" + name + "'");
}

// ---------------------------------------------------------- ShuffleElement

ShuffleElement::ShuffleElement(Flavor flavor, std::vector<int> grading, XPoly numerator)
    : flavor_(flavor), grading_(std::move(grading)), numerator_(std::move(numerator)) {
    if (static_cast<int>(grading_.size()) != flavor_.rank())
        throw InvalidInput("grading has " + std::to_string(grading_.size()) + " entries, " +
                           flavor_.to_string() + " has " + std::to_string(flavor_.rank()) + " colors");
    for (int k : grading_)
        if (k < 0) throw InvalidInput("negative grading entry");
    for (VarCode c : numerator_.variables()) {
        VarId v = decode(c);
        if (v.ns != 'x' || v.color < 1 || v.color > flavor_.rank() || v.slot < 1 ||
            v.slot > grading_[v.color - 1])
            throw InvalidInput("variable " + v.key() + " does not fit the grading");
    }
    for (const auto& [m, c] : numerator_.terms()) {
        const PExp& p = m.params();
        if (param_count(flavor_.params()) < 2 && p[1] != 0)
            throw InvalidInput("numerator uses a parameter foreign to " + flavor_.to_string());
    }
}

ShuffleElement ShuffleElement::unit(const Flavor& flavor) {
    return ShuffleElement(flavor, std::vector<int>(flavor.rank(), 0), XPoly(1));
}

ShuffleElement ShuffleElement::zero(const Flavor& flavor, std::vector<int> grading) {
    return ShuffleElement(flavor, std::move(grading), XPoly());
}

ShuffleElement ShuffleElement::generator(const Flavor& flavor, int i, int r) {
    flavor.check_color(i);
    if (flavor.is_yangian() && r < 0) throw InvalidInput("Yangian modes must be non-negative");
    std::vector<int> grading(flavor.rank(), 0);
    grading[i - 1] = 1;
    return ShuffleElement(flavor, std::move(grading), XPoly::var(xvar(i, 1), r));
}

int ShuffleElement::total_degree() const { return std::accumulate(grading_.begin(), grading_.end(), 0); }

XPoly ShuffleElement::denominator() const {
    XPoly out(1);
    for (int i = 1; i < flavor_.rank(); ++i)
        for (int r = 1; r <= grading_[i - 1]; ++r)
            for (int s = 1; s <= grading_[i]; ++s) out *= x_of(i, r) - x_of(i + 1, s);
    return out;
}

ShuffleElement ShuffleElement::operator-() const { return ShuffleElement(flavor_, grading_, -numerator_); }

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& o) {
    if (!(flavor_ == o.flavor_)) throw FlavorMismatch("adding elements of different flavors");
    if (o.is_zero()) return *this;
    if (is_zero() && grading_ != o.grading_) return *this = o;
    if (grading_ != o.grading_) throw InvalidInput("adding elements of different gradings");
    numerator_ += o.numerator_;
    return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& o) { return *this += -o; }

ShuffleElement& ShuffleElement::operator*=(const ParamPoly& c) {
    numerator_ *= c;
    return *this;
}

bool operator==(const ShuffleElement& a, const ShuffleElement& b) {
    if (!(a.flavor_ == b.flavor_)) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.grading_ == b.grading_ && a.numerator_ == b.numerator_;
}

// --------------------------------------------------------- shuffle product

ShuffleElement shuffle_product(const ShuffleElement& F, const ShuffleElement& G) {
    if (!(F.flavor() == G.flavor())) throw FlavorMismatch("shuffle product of different flavors");
    const Flavor& fl = F.flavor();
    const int nc = fl.rank();
    const auto& k = F.grading();
    const auto& l = G.grading();
    std::vector<int> total(nc);
    for (int c = 0; c < nc; ++c) total[c] = k[c] + l[c];
    check_guard(total);
    if (F.is_zero() || G.is_zero()) return ShuffleElement::zero(fl, total);

    const bool additive = fl.is_yangian();
    std::vector<std::vector<Zeta>> zeta(nc, std::vector<Zeta>(nc));
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) zeta[i][j] = fl.zeta(i + 1, j + 1);

    std::vector<std::vector<std::vector<int>>> choices(nc);
    std::vector<bool> clears_vandermonde(nc);
    Rational constant = 1;
    int sign_exponent = 0;
    for (int c = 0; c < nc; ++c) {
        choices[c] = subsets(total[c], k[c]);
        clears_vandermonde[c] = !zeta[c][c].trivial && k[c] > 0 && l[c] > 0;
        constant *= factorial(k[c]) * factorial(l[c]) / factorial(total[c]);
        if (c + 1 < nc) sign_exponent += k[c + 1] * l[c];
    }
    if (sign_exponent % 2) constant = -constant;

    std::vector<size_t> idx(nc, 0);
    XPoly sum;
    while (true) {
        std::vector<std::vector<int>> A(nc), B(nc);
        std::map<VarCode, VarCode> ren_f, ren_g;
        for (int c = 0; c < nc; ++c) {
            A[c] = choices[c][idx[c]];
            B[c] = complement(A[c], total[c]);
            for (int r = 0; r < k[c]; ++r) ren_f[encode(xvar(c + 1, r + 1))] = encode(xvar(c + 1, A[c][r]));
            for (int r = 0; r < l[c]; ++r) ren_g[encode(xvar(c + 1, r + 1))] = encode(xvar(c + 1, B[c][r]));
        }
        XPoly factors(1);
        bool negate = false;
        for (int i = 0; i < nc; ++i) {
            for (int j = std::max(0, i - 1); j <= std::min(nc - 1, i + 1); ++j) {
                if (zeta[i][j].trivial) continue;
                for (int a : A[i])
                    for (int b : B[j]) factors *= zeta[i][j].numerator(x_of(i + 1, a), x_of(j + 1, b), additive);
            }
            if (clears_vandermonde[i]) {
                factors *= vandermonde(i + 1, A[i]) * vandermonde(i + 1, B[i]);
                if (inversions(A[i], B[i]) % 2) negate = !negate;
            } else if (fl.is_skew(i + 1)) {
                if (inversions(A[i], B[i]) % 2) negate = !negate;
            }
        }
        XPoly term = F.numerator().relabel(ren_f) * G.numerator().relabel(ren_g) * factors;
        if (negate) {
            sum -= term;
        } else {
            sum += term;
        }

        int c = 0;
        while (c < nc && ++idx[c] == choices[c].size()) idx[c++] = 0;
        if (c == nc) break;
    }

    for (int c = 0; c < nc; ++c) {
        if (!clears_vandermonde[c]) continue;
        for (int p = 1; p <= total[c]; ++p)
            for (int q = p + 1; q <= total[c]; ++q) {
                auto quotient = sum.divide_linear(encode(xvar(c + 1, p)), x_of(c + 1, q));
                if (!quotient) throw InternalError("shuffle product: symmetrized sum not divisible");
                sum = std::move(*quotient);
            }
    }
    sum *= constant;
    return ShuffleElement(fl, total, std::move(sum));
}

// ------------------------------------------------------------- predicates

bool check_pole(const ShuffleElement& F) {
    const Flavor& fl = F.flavor();
    for (int c = 1; c <= fl.rank(); ++c)
        if (!is_symmetric_in(F.numerator(), 'x', c, F.grading()[c - 1], fl.is_skew(c))) return false;
    if (fl.is_yangian() && F.numerator().has_negative_exponents()) return false;
    return true;
}

std::vector<WheelPattern> wheel_patterns(const Flavor& fl, const std::vector<int>& grading) {
    std::vector<WheelPattern> out;
    const int nc = fl.rank();
    const XPoly t = XPoly::var(tvar());
    const bool additive = fl.is_yangian();
    auto at = [&](int step) -> XPoly {  // point of a geometric/arithmetic string
        return additive ? t + XPoly(half_h(step)) : t;
    };
    for (int i = 1; i <= nc; ++i) {
        if (fl.is_skew(i)) continue;
        for (int eps : {-1, 1}) {
            int j = i + eps;
            if (j < 1 || j > nc) continue;
            XPoly mid, far;
            if (additive) {
                mid = at(1);
                far = at(2);
            } else {
                ParamPoly b = fl.color_base(i);
                mid = t * b;
                far = t * (b * b);
            }
            for (int r1 = 1; r1 <= grading[i - 1]; ++r1)
                for (int r2 = 1; r2 <= grading[i - 1]; ++r2) {
                    if (r1 == r2) continue;
                    for (int s = 1; s <= grading[j - 1]; ++s) {
                        WheelPattern p{"first", {}};
                        p.images[encode(xvar(i, r2))] = t;
                        p.images[encode(xvar(j, s))] = mid;
                        p.images[encode(xvar(i, r1))] = far;
                        out.push_back(std::move(p));
                    }
                }
        }
    }
    if (fl.is_super()) {
        int m = fl.m();
        if (m - 1 >= 1 && m + 1 <= nc) {
            XPoly low = additive ? at(-1) : t * ParamPoly::param(0, -1);
            XPoly high = additive ? at(1) : t * ParamPoly::param(0, 1);
            for (int r1 = 1; r1 <= grading[m - 1]; ++r1)
                for (int r2 = 1; r2 <= grading[m - 1]; ++r2) {
                    if (r1 == r2) continue;
                    for (int s = 1; s <= grading[m - 2]; ++s)
                        for (int s2 = 1; s2 <= grading[m]; ++s2) {
                            WheelPattern p{"second", {}};
                            p.images[encode(xvar(m - 1, s))] = t;
                            p.images[encode(xvar(m, r1))] = low;
                            p.images[encode(xvar(m + 1, s2))] = t;
                            p.images[encode(xvar(m, r2))] = high;
                            out.push_back(std::move(p));
                        }
                }
        }
    }
    return out;
}

bool check_wheel(const ShuffleElement& F) {
    if (F.is_zero()) return true;
    for (const auto& p : wheel_patterns(F.flavor(), F.grading()))
        if (!F.numerator().substitute(p.images).is_zero()) return false;
    return true;
}

ShuffleElement shift_map(const ShuffleElement& F, int l) {
    if (F.flavor().kind() != Kind::TrigA) throw FlavorMismatch("shift_map is defined for trig-a only");
    F.flavor().check_color(l);
    XPoly num = F.numerator();
    for (int r = 1; r <= F.grading()[l - 1]; ++r) num *= XPoly(1) - XPoly::var(xvar(l, r), -1);
    return ShuffleElement(F.flavor(), F.grading(), std::move(num));
}

ParamPoly degenerate_two_param(const ParamPoly& c) {
    std::vector<ParamPoly::Term> out;
    for (const auto& [e, r] : c.terms()) {
        if ((e[0] - e[1]) % 2 != 0) throw InvalidInput("odd half-power survives the degeneration");
        out.emplace_back(PExp{(e[0] - e[1]) / 2, 0}, r);
    }
    return ParamPoly::from_terms(std::move(out));
}

ShuffleElement degenerate_two_param(const ShuffleElement& F) {
    if (F.flavor().kind() != Kind::TrigTwoParam) throw FlavorMismatch("degeneration needs a trig-2p element");
    XPoly num = F.numerator().map_params([](const PExp& e) { return degenerate_two_param(ParamPoly::monomial(e)); });
    return ShuffleElement(Flavor::trig_a(F.flavor().n()), F.grading(), std::move(num));
}

}  // namespace qsa
