#include "qsa/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qsa/error.hpp"

namespace qsa {

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

int param_count(ParamSet ps) { return ps == ParamSet::U ? 2 : 1; }

std::vector<std::string> param_symbols(ParamSet ps) {
    switch (ps) {
        case ParamSet::V: return {"v"};
        case ParamSet::U: return {"u1", "u2"};
        case ParamSet::H: return {"h"};
    }
    return {};
}

PExp operator+(const PExp& a, const PExp& b) { return {a[0] + b[0], a[1] + b[1]}; }
PExp operator-(const PExp& a, const PExp& b) { return {a[0] - b[0], a[1] - b[1]}; }
PExp operator-(const PExp& a) { return {-a[0], -a[1]}; }

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) terms_.emplace_back(PExp{0, 0}, c);
}

ParamPoly ParamPoly::monomial(const PExp& e, const Rational& c) {
    ParamPoly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
}

ParamPoly ParamPoly::param(int idx, int power) {
    PExp e{0, 0};
    e.at(idx) = power;
    return monomial(e, 1);
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
    ParamPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void ParamPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && out.back().second == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().second == 0) out.pop_back();
    terms_ = std::move(out);
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == PExp{0, 0});
}

bool ParamPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e[0] < 0 || e[1] < 0) return false;
    return true;
}

const ParamPoly::Term& ParamPoly::leading() const {
    if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
    return terms_.back();
}

Rational ParamPoly::constant_term() const {
    for (const auto& [e, c] : terms_)
        if (e == PExp{0, 0}) return c;
    return 0;
}

PExp ParamPoly::min_exponents() const {
    if (terms_.empty()) return {0, 0};
    PExp m = terms_[0].first;
    for (const auto& [e, c] : terms_) {
        m[0] = std::min(m[0], e[0]);
        m[1] = std::min(m[1], e[1]);
    }
    return m;
}

PExp ParamPoly::max_exponents() const {
    if (terms_.empty()) return {0, 0};
    PExp m = terms_[0].first;
    for (const auto& [e, c] : terms_) {
        m[0] = std::max(m[0], e[0]);
        m[1] = std::max(m[1], e[1]);
    }
    return m;
}

int ParamPoly::degree_in(int idx) const { return max_exponents().at(idx); }
int ParamPoly::low_degree_in(int idx) const { return min_exponents().at(idx); }

bool ParamPoly::uses(int idx) const {
    for (const auto& [e, c] : terms_)
        if (e.at(idx) != 0) return true;
    return false;
}

ParamPoly ParamPoly::shifted(const PExp& s) const {
    ParamPoly p = *this;
    for (auto& [e, c] : p.terms_) e = e + s;
    return p;  // translation keeps the order
}

ParamPoly ParamPoly::pow(int k) const {
    if (k < 0) {
        if (!is_monomial()) throw InvalidInput("negative power of a non-monomial ParamPoly");
        const auto& [e, c] = terms_[0];
        Rational inv = 1 / c;
        ParamPoly base = monomial(-e, inv);
        return base.pow(-k);
    }
    ParamPoly result(1);
    ParamPoly base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& t : o.terms_) terms_.emplace_back(t.first, -t.second);
    normalize();
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly p;
    p.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.terms_.emplace_back(ea + eb, ca * cb);
    p.normalize();
    return p;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

bool operator<(const ParamPoly& a, const ParamPoly& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t k = 0; k < n; ++k) {
        if (a.terms_[k].first != b.terms_[k].first) return a.terms_[k].first < b.terms_[k].first;
        if (a.terms_[k].second != b.terms_[k].second)
            return a.terms_[k].second < b.terms_[k].second;
    }
    return a.terms_.size() < b.terms_.size();
}

ParamPoly ParamPoly::substitute_monomials(const std::vector<ParamPoly>& images) const {
    ParamPoly out;
    for (const auto& [e, c] : terms_) {
        ParamPoly t(c);
        for (size_t idx = 0; idx < images.size() && idx < 2; ++idx)
            if (e[idx] != 0) t *= images[idx].pow(e[idx]);
        out += t;
    }
    return out;
}

std::string ParamPoly::to_string(ParamSet ps) const {
    if (terms_.empty()) return "0";
    auto names = param_symbols(ps);
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool mono = e != PExp{0, 0};
        if (!mono || mag != 1) {
            os << mag.get_str();
            if (mono) os << "*";
        }
        bool lead = true;
        for (size_t idx = 0; idx < names.size(); ++idx) {
            if (e[idx] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << names[idx];
            if (e[idx] != 1) os << "^" << e[idx];
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ q-numbers

ParamPoly qint(int k, ParamSet ps) {
    if (k < 1) throw InvalidInput("qint needs k >= 1");
    if (ps == ParamSet::H) throw FlavorMismatch("q-integers are undefined for the Yangian parameter");
    std::vector<ParamPoly::Term> terms;
    for (int t = 0; t < k; ++t) {
        int a = k - 1 - 2 * t;
        PExp e = ps == ParamSet::U ? PExp{a, -a} : PExp{a, 0};
        terms.emplace_back(e, Rational(1));
    }
    return ParamPoly::from_terms(std::move(terms));
}

ParamPoly qfact(int k, ParamSet ps) {
    if (k < 0) throw InvalidInput("qfact needs k >= 0");
    ParamPoly p(1);
    for (int t = 1; t <= k; ++t) p *= qint(t, ps);
    return p;
}

// ------------------------------------------------------------------ division

namespace {

bool divides(const PExp& small, const PExp& big) {
    return small[0] <= big[0] && small[1] <= big[1];
}

// Exact division in Q[p0, p1] with lex order; inputs have no negative exponents.
std::optional<ParamPoly> poly_divide(const ParamPoly& a, const ParamPoly& b) {
    const auto& [eb, cb] = b.leading();
    ParamPoly r = a;
    std::vector<ParamPoly::Term> q;
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        if (!divides(eb, er)) return std::nullopt;
        PExp e = er - eb;
        Rational c = cr / cb;
        q.emplace_back(e, c);
        r -= b.shifted(e) * ParamPoly(c);
    }
    return ParamPoly::from_terms(std::move(q));
}

ParamPoly strip_monomial(const ParamPoly& p) { return p.shifted(-p.min_exponents()); }

ParamPoly monic(const ParamPoly& p) {
    if (p.is_zero()) return p;
    ParamPoly q = p;
    q *= Rational(1) / p.leading().second;
    return q;
}

// Remainder of univariate division (variable idx only).
ParamPoly uni_rem(ParamPoly a, const ParamPoly& b, int idx) {
    const auto& [eb, cb] = b.leading();
    int db = eb[idx];
    while (!a.is_zero() && a.degree_in(idx) >= db) {
        const auto& [ea, ca] = a.leading();
        PExp shift{0, 0};
        shift[idx] = ea[idx] - db;
        Rational c = ca / cb;
        a -= b.shifted(shift) * ParamPoly(c);
    }
    return a;
}

ParamPoly uni_gcd(ParamPoly a, ParamPoly b, int idx) {
    while (!b.is_zero()) {
        ParamPoly r = uni_rem(a, b, idx);
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

// Coefficient of p0^d, as a polynomial in p1.
ParamPoly coeff0(const ParamPoly& p, int d) {
    std::vector<ParamPoly::Term> out;
    for (const auto& [e, c] : p.terms())
        if (e[0] == d) out.emplace_back(PExp{0, e[1]}, c);
    return ParamPoly::from_terms(std::move(out));
}

ParamPoly content0(const ParamPoly& p) {
    ParamPoly g;
    int d = p.degree_in(0);
    for (int k = 0; k <= d; ++k) {
        ParamPoly c = coeff0(p, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : uni_gcd(g, c, 1);
        if (g.is_constant()) return ParamPoly(1);
    }
    return g;
}

ParamPoly primitive0(const ParamPoly& p) {
    ParamPoly c = content0(p);
    auto q = poly_divide(p, c);
    if (!q) throw InternalError("content does not divide polynomial");
    return *q;
}

ParamPoly bi_gcd(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly c = uni_gcd(content0(a), content0(b), 1);
    ParamPoly A = primitive0(a);
    ParamPoly B = primitive0(b);
    if (A.degree_in(0) < B.degree_in(0)) std::swap(A, B);
    while (!B.is_zero()) {
        if (B.degree_in(0) == 0) {
            A = ParamPoly(1);
            break;
        }
        int db = B.degree_in(0);
        ParamPoly lcb = coeff0(B, db);
        ParamPoly R = A;
        while (!R.is_zero() && R.degree_in(0) >= db) {
            int dr = R.degree_in(0);
            ParamPoly lcr = coeff0(R, dr);
            R = lcb * R - lcr * B.shifted(PExp{dr - db, 0});
        }
        A = std::move(B);
        B = R.is_zero() ? R : primitive0(R);
    }
    return monic(c * primitive0(A));
}

}  // namespace

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw InvalidInput("division by zero ParamPoly");
    if (a.is_zero()) return ParamPoly();
    PExp ma = a.min_exponents();
    PExp mb = b.min_exponents();
    auto q = poly_divide(a.shifted(-ma), b.shifted(-mb));
    if (!q) return std::nullopt;
    return q->shifted(ma - mb);
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() && b.is_zero()) return ParamPoly();
    if (a.is_zero()) return monic(strip_monomial(b));
    if (b.is_zero()) return monic(strip_monomial(a));
    ParamPoly A = strip_monomial(a);
    ParamPoly B = strip_monomial(b);
    bool u0 = A.uses(0) || B.uses(0);
    bool u1 = A.uses(1) || B.uses(1);
    if (!u0 && !u1) return ParamPoly(1);
    if (u0 && u1) return bi_gcd(A, B);
    return uni_gcd(monic(A), monic(B), u0 ? 0 : 1);
}

// ------------------------------------------------------------------ ParamFrac

ParamFrac::ParamFrac(const ParamPoly& num) : num_(num), den_(1) {}

ParamFrac::ParamFrac(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) {
    normalize();
}

void ParamFrac::normalize() {
    if (den_.is_zero()) throw InvalidInput("ParamFrac with zero denominator");
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    PExp md = den_.min_exponents();
    den_ = den_.shifted(-md);
    num_ = num_.shifted(-md);
    PExp mn = num_.min_exponents();
    ParamPoly n = num_.shifted(-mn);
    ParamPoly g = gcd(n, den_);
    if (!g.is_constant()) {
        n = *divide_exact(n, g);
        den_ = *divide_exact(den_, g);
    }
    Rational lc = den_.leading().second;
    Rational inv = Rational(1) / lc;
    n *= inv;
    den_ *= inv;
    num_ = n.shifted(mn);
}

ParamFrac ParamFrac::operator-() const {
    ParamFrac f = *this;
    f.num_ = -f.num_;
    return f;
}

ParamFrac& ParamFrac::operator+=(const ParamFrac& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

ParamFrac& ParamFrac::operator-=(const ParamFrac& o) { return *this += -o; }

ParamFrac& ParamFrac::operator*=(const ParamFrac& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

ParamFrac& ParamFrac::operator/=(const ParamFrac& o) {
    if (o.is_zero()) throw InvalidInput("division by zero ParamFrac");
    ParamPoly n = num_ * o.den_;
    ParamPoly d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

bool operator==(const ParamFrac& a, const ParamFrac& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ParamFrac::to_string(ParamSet ps) const {
    if (den_ == ParamPoly(1)) return num_.to_string(ps);
    return "(" + num_.to_string(ps) + ")/(" + den_.to_string(ps) + ")";
}

}  // namespace qsa
