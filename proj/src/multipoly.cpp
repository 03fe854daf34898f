#include "qsa/multipoly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qsa/error.hpp"

namespace qsa {

// -------------------------------------------------------------------- VarId

namespace {

int ns_code(char ns) {
    switch (ns) {
        case 'x': return 1;
        case 'y': return 2;
        case 'z': return 3;
        case 't': return 4;
        default: throw InvalidInput(std::string("unknown variable namespace '") + ns + "'");
    }
}

char ns_char(int c) {
    static const char table[] = {'?', 'x', 'y', 'z', 't'};
    if (c < 1 || c > 4) throw InternalError("bad variable code");
    return table[c];
}

}  // namespace

std::string VarId::key() const {
    return std::string(1, ns) + ":" + std::to_string(color) + ":" + std::to_string(slot);
}

VarId VarId::parse(const std::string& key) {
    auto c1 = key.find(':');
    auto c2 = key.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 != 1 || c2 == std::string::npos) throw InvalidInput("bad variable key '" + key + "'");
    VarId v;
    v.ns = key[0];
    try {
        size_t used = 0;
        std::string a = key.substr(c1 + 1, c2 - c1 - 1);
        std::string b = key.substr(c2 + 1);
        v.color = std::stoi(a, &used);
        if (used != a.size()) throw InvalidInput("");
        v.slot = std::stoi(b, &used);
        if (used != b.size()) throw InvalidInput("");
    } catch (const std::exception&) {
        throw InvalidInput("bad variable key '" + key + "'");
    }
    encode(v);
    return v;
}

VarCode encode(const VarId& v) {
    int n = ns_code(v.ns);
    if (v.color < 0 || v.color > 63 || v.slot < 0 || v.slot > 63)
        throw InvalidInput("variable index out of range: " + v.key());
    return static_cast<VarCode>((n << 12) | (v.color << 6) | v.slot);
}

VarId decode(VarCode c) {
    return {ns_char(c >> 12), (c >> 6) & 63, c & 63};
}

// --------------------------------------------------------------------- Mono

int Mono::exponent(VarCode c) const {
    for (int k = 0; k < size_; ++k)
        if (entries_[k].code == c) return entries_[k].exp;
    return 0;
}

void Mono::set(VarCode c, int e) {
    int k = 0;
    while (k < size_ && entries_[k].code < c) ++k;
    if (k < size_ && entries_[k].code == c) {
        if (e == 0) {
            for (int t = k; t + 1 < size_; ++t) entries_[t] = entries_[t + 1];
            --size_;
        } else {
            entries_[k].exp = static_cast<std::int16_t>(e);
        }
        return;
    }
    if (e == 0) return;
    if (size_ == kCapacity) throw InvalidInput("too many variables in one monomial");
    for (int t = size_; t > k; --t) entries_[t] = entries_[t - 1];
    entries_[k] = {c, static_cast<std::int16_t>(e)};
    ++size_;
}

Mono Mono::without_params() const {
    Mono m = *this;
    m.params_ = {0, 0};
    return m;
}

Mono& Mono::operator*=(const Mono& o) {
    params_ = params_ + o.params_;
    if (o.size_ == 0) return *this;
    std::array<Entry, kCapacity> merged{};
    int a = 0, b = 0, n = 0;
    while (a < size_ || b < o.size_) {
        Entry e;
        if (b >= o.size_ || (a < size_ && entries_[a].code < o.entries_[b].code)) {
            e = entries_[a++];
        } else if (a >= size_ || o.entries_[b].code < entries_[a].code) {
            e = o.entries_[b++];
        } else {
            e = {entries_[a].code, static_cast<std::int16_t>(entries_[a].exp + o.entries_[b].exp)};
            ++a;
            ++b;
            if (e.exp == 0) continue;
        }
        if (n == kCapacity) throw InvalidInput("too many variables in one monomial");
        merged[n++] = e;
    }
    entries_ = merged;
    size_ = static_cast<std::uint8_t>(n);
    return *this;
}

bool operator==(const Mono& a, const Mono& b) {
    if (a.size_ != b.size_ || a.params_ != b.params_) return false;
    for (int k = 0; k < a.size_; ++k)
        if (!(a.entries_[k] == b.entries_[k])) return false;
    return true;
}

bool operator<(const Mono& a, const Mono& b) {
    int n = std::min(a.size_, b.size_);
    for (int k = 0; k < n; ++k) {
        const auto& x = a.entries_[k];
        const auto& y = b.entries_[k];
        if (x.code != y.code) return x.code < y.code;
        if (x.exp != y.exp) return x.exp < y.exp;
    }
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.params_ < b.params_;
}

std::size_t Mono::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint32_t>(params_[0]));
    mix(static_cast<std::uint32_t>(params_[1]));
    for (int k = 0; k < size_; ++k)
        mix((static_cast<std::uint64_t>(entries_[k].code) << 16) |
            static_cast<std::uint16_t>(entries_[k].exp));
    return static_cast<std::size_t>(h);
}

// -------------------------------------------------------------------- XPoly

XPoly::XPoly(const ParamPoly& c) {
    for (const auto& [e, r] : c.terms()) terms_.emplace_back(Mono(e), r);
    normalize();
}

XPoly XPoly::var(const VarId& v, int exp) {
    Mono m;
    m.set(encode(v), exp);
    return monomial(m, 1);
}

XPoly XPoly::monomial(const Mono& m, const Rational& c) {
    XPoly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

XPoly XPoly::from_terms(std::vector<Term> terms) {
    XPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

XPoly XPoly::from_coefficients(const std::vector<std::pair<Mono, ParamPoly>>& coeffs) {
    std::vector<Term> terms;
    for (const auto& [m, c] : coeffs)
        for (const auto& [e, r] : c.terms()) {
            Mono t = m;
            t.params() = m.params() + e;
            terms.emplace_back(t, r);
        }
    return from_terms(std::move(terms));
}

void XPoly::normalize() {
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

std::vector<std::pair<Mono, ParamPoly>> XPoly::coefficients() const {
    std::vector<std::pair<Mono, ParamPoly>> out;
    std::vector<ParamPoly::Term> buf;
    Mono current;
    bool open = false;
    auto flush = [&]() {
        if (open) out.emplace_back(current, ParamPoly::from_terms(std::move(buf)));
        buf.clear();
    };
    for (const auto& [m, c] : terms_) {
        Mono key = m.without_params();
        if (!open || !(key == current)) {
            flush();
            current = key;
            open = true;
        }
        buf.emplace_back(m.params(), c);
    }
    flush();
    return out;
}

ParamPoly XPoly::coefficient(const Mono& m) const {
    Mono key = m.without_params();
    std::vector<ParamPoly::Term> buf;
    for (const auto& [t, c] : terms_)
        if (t.without_params() == key) buf.emplace_back(t.params(), c);
    return ParamPoly::from_terms(std::move(buf));
}

bool XPoly::is_constant() const {
    for (const auto& [m, c] : terms_)
        if (m.size() != 0) return false;
    return true;
}

ParamPoly XPoly::constant_value() const {
    std::vector<ParamPoly::Term> buf;
    for (const auto& [m, c] : terms_)
        if (m.size() == 0) buf.emplace_back(m.params(), c);
    return ParamPoly::from_terms(std::move(buf));
}

std::vector<VarCode> XPoly::variables() const {
    std::set<VarCode> s;
    for (const auto& [m, c] : terms_)
        for (const auto& e : m) s.insert(e.code);
    return {s.begin(), s.end()};
}

std::pair<int, int> XPoly::degree_range(VarCode code) const {
    if (terms_.empty()) return {0, 0};
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(code);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {lo, hi};
}

bool XPoly::uses(VarCode code) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(code) != 0) return true;
    return false;
}

bool XPoly::has_negative_exponents() const {
    for (const auto& [m, c] : terms_)
        for (const auto& e : m)
            if (e.exp < 0) return true;
    return false;
}

XPoly XPoly::operator-() const {
    XPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t a = 0, b = 0;
    while (a < terms_.size() || b < o.terms_.size()) {
        if (b >= o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
            out.push_back(std::move(terms_[a++]));
        } else if (a >= terms_.size() || o.terms_[b].first < terms_[a].first) {
            out.push_back(o.terms_[b++]);
        } else {
            Rational s = terms_[a].second + o.terms_[b].second;
            if (s != 0) out.emplace_back(terms_[a].first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return XPoly();
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const XPoly& one = a.terms_.size() == 1 ? a : b;
        const XPoly& many = a.terms_.size() == 1 ? b : a;
        const auto& [m1, c1] = one.terms_[0];
        std::vector<XPoly::Term> out;
        out.reserve(many.terms_.size());
        for (const auto& [m, c] : many.terms_) out.emplace_back(m * m1, c * c1);
        return XPoly::from_terms(std::move(out));
    }
    std::unordered_map<Mono, Rational, MonoHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 16);
    Rational prod;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            auto [it, fresh] = acc.try_emplace(ma * mb, prod);
            if (!fresh) it->second += prod;
        }
    std::vector<XPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, std::move(c));
    return XPoly::from_terms(std::move(out));
}

XPoly& XPoly::operator*=(const XPoly& o) { return *this = *this * o; }
XPoly& XPoly::operator*=(const ParamPoly& c) { return *this = *this * XPoly(c); }

XPoly& XPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

XPoly XPoly::pow(int k) const {
    if (k < 0) {
        if (terms_.size() != 1) throw InvalidInput("negative power of a non-monomial XPoly");
        const auto& [m, c] = terms_[0];
        Mono inv;
        inv.params() = -m.params();
        for (const auto& e : m) inv.set(e.code, -e.exp);
        return monomial(inv, Rational(1) / c).pow(-k);
    }
    XPoly result(1);
    XPoly base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

XPoly XPoly::relabel(const std::map<VarCode, VarCode>& perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Mono t(m.params());
        for (const auto& e : m) {
            auto it = perm.find(e.code);
            VarCode code = it == perm.end() ? e.code : it->second;
            if (t.exponent(code) != 0) throw InvalidInput("relabel is not injective");
            t.set(code, e.exp);
        }
        out.emplace_back(t, c);
    }
    return from_terms(std::move(out));
}

XPoly XPoly::substitute(const std::map<VarCode, XPoly>& images) const {
    // Fast path when each image is a single term.
    bool monomial_images = std::all_of(images.begin(), images.end(),
                                       [](const auto& kv) { return kv.second.size() == 1; });
    if (monomial_images) {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            Mono t(m.params());
            Rational coeff = c;
            for (const auto& e : m) {
                auto it = images.find(e.code);
                if (it == images.end()) {
                    Mono single;
                    single.set(e.code, e.exp);
                    t *= single;
                    continue;
                }
                const auto& [im, ic] = it->second.terms_[0];
                for (int rep = 0; rep < std::abs(e.exp); ++rep) {
                    if (e.exp > 0) {
                        t *= im;
                        coeff *= ic;
                    } else {
                        Mono inv;
                        inv.params() = -im.params();
                        for (const auto& ie : im) inv.set(ie.code, -ie.exp);
                        t *= inv;
                        coeff /= ic;
                    }
                }
            }
            out.emplace_back(t, coeff);
        }
        return from_terms(std::move(out));
    }
    std::map<std::pair<VarCode, int>, XPoly> powers;
    auto power_of = [&](VarCode code, int e) -> const XPoly& {
        auto key = std::make_pair(code, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, images.at(code).pow(e)).first->second;
    };
    // Group terms by their exponents in the substituted variables so each
    // product of image powers is built once, then accumulate in a hash map
    // (merging sorted vectors term by term is quadratic).
    std::map<Mono, std::vector<std::pair<Mono, const Rational*>>> groups;
    for (const auto& [m, c] : terms_) {
        Mono key, rest(m.params());
        for (const auto& e : m) {
            if (images.count(e.code))
                key.set(e.code, e.exp);
            else
                rest.set(e.code, e.exp);
        }
        groups[key].emplace_back(rest, &c);
    }
    std::unordered_map<Mono, Rational, MonoHash> sum;
    for (const auto& [key, rests] : groups) {
        XPoly image(1);
        for (const auto& e : key) image *= power_of(e.code, e.exp);
        for (const auto& [im, ic] : image.terms_)
            for (const auto& [rest, c] : rests) {
                auto [it, fresh] = sum.try_emplace(im * rest, ic * *c);
                if (!fresh) it->second += ic * *c;
            }
    }
    std::vector<Term> out;
    out.reserve(sum.size());
    for (auto& [m, c] : sum)
        if (c != 0) out.emplace_back(m, std::move(c));
    return from_terms(std::move(out));
}

XPoly XPoly::map_params(const std::function<ParamPoly(const PExp&)>& fn) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        ParamPoly image = fn(m.params());
        for (const auto& [e, r] : image.terms()) {
            Mono t = m;
            t.params() = e;
            out.emplace_back(t, c * r);
        }
    }
    return from_terms(std::move(out));
}

std::optional<XPoly> XPoly::divide_linear(VarCode u, const XPoly& L) const {
    if (L.uses(u)) throw InvalidInput("divide_linear: L involves the division variable");
    if (terms_.empty()) return XPoly();
    std::map<int, std::vector<Term>> buckets;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(u);
        Mono rest = m;
        rest.set(u, 0);
        buckets[e].emplace_back(rest, c);
    }
    int lo = buckets.begin()->first;
    int hi = buckets.rbegin()->first;
    auto coeff = [&](int e) -> XPoly {
        auto it = buckets.find(e);
        if (it == buckets.end()) return XPoly();
        return from_terms(std::move(it->second));
    };
    // P = sum p_e u^e ; Q = sum q_e u^e with q_{e-1} = p_e + L q_e.
    std::vector<XPoly> q(hi - lo + 1);  // q[e - lo] for e in [lo, hi-1]
    XPoly carry;
    for (int e = hi; e > lo; --e) {
        XPoly qe = coeff(e) + L * carry;
        q[e - 1 - lo] = qe;
        carry = std::move(qe);
    }
    XPoly rem = coeff(lo) + L * carry;
    if (!rem.is_zero()) return std::nullopt;
    std::vector<Term> out;
    for (int e = lo; e < hi; ++e) {
        for (const auto& [m, c] : q[e - lo].terms_) {
            Mono t = m;
            t.set(u, e);
            out.emplace_back(t, c);
        }
    }
    return from_terms(std::move(out));
}

std::optional<XPoly> XPoly::divide_scalar(const ParamPoly& d) const {
    if (d.is_zero()) throw InvalidInput("division by zero");
    std::vector<std::pair<Mono, ParamPoly>> out;
    for (const auto& [m, c] : coefficients()) {
        auto q = divide_exact(c, d);
        if (!q) return std::nullopt;
        out.emplace_back(m, std::move(*q));
    }
    return from_coefficients(out);
}

ParamPoly XPoly::content() const {
    ParamPoly g;
    for (const auto& [m, c] : coefficients()) {
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

std::string XPoly::to_string(ParamSet ps) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coefficients()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string(ps) << ")";
        for (const auto& e : m) {
            os << "*" << decode(e.code).key();
            if (e.exp != 1) os << "^" << e.exp;
        }
    }
    return os.str();
}

// ------------------------------------------------------------ symmetrization

namespace {

std::uint64_t initial_guard() {
    if (const char* env = std::getenv("QSA_GUARD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ULL;
}

std::atomic<std::uint64_t>& guard_value() {
    static std::atomic<std::uint64_t> value{initial_guard()};
    return value;
}

}  // namespace

std::uint64_t symmetrization_guard() { return guard_value().load(); }
void set_symmetrization_guard(std::uint64_t limit) { guard_value().store(limit); }

void check_guard(const std::vector<int>& block_sizes) {
    const std::uint64_t limit = symmetrization_guard();
    std::uint64_t total = 1;
    for (int n : block_sizes)
        for (int t = 2; t <= n; ++t) {
            total *= static_cast<std::uint64_t>(t);
            if (total > limit)
                throw GuardExceeded("symmetrization of size exceeding the guard " +
                                    std::to_string(limit));
        }
}

XPoly transpose(const XPoly& f, const VarId& a, const VarId& b) {
    return f.relabel({{encode(a), encode(b)}, {encode(b), encode(a)}});
}

bool is_symmetric_in(const XPoly& f, char ns, int color, int k, bool skew) {
    for (int r = 1; r < k; ++r) {
        XPoly g = transpose(f, VarId{ns, color, r}, VarId{ns, color, r + 1});
        if (skew ? g != -f : g != f) return false;
    }
    return true;
}

XPoly symmetrize(const XPoly& f, const std::vector<int>& grading, const std::set<int>& skew_colors) {
    check_guard(grading);
    XPoly current = f;
    for (size_t idx = 0; idx < grading.size(); ++idx) {
        int color = static_cast<int>(idx) + 1;
        int k = grading[idx];
        if (k < 2) continue;
        bool skew = skew_colors.count(color) > 0;
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 1);
        XPoly sum;
        Rational count = 0;
        do {
            std::map<VarCode, VarCode> ren;
            int inversions = 0;
            for (int a = 0; a < k; ++a) {
                ren[encode(xvar(color, a + 1))] = encode(xvar(color, perm[a]));
                for (int b = a + 1; b < k; ++b)
                    if (perm[a] > perm[b]) ++inversions;
            }
            XPoly term = current.relabel(ren);
            if (skew && (inversions % 2)) term = -term;
            sum += term;
            count += 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
        sum *= Rational(1) / count;
        current = std::move(sum);
    }
    return current;
}

XPoly substitute(const XPoly& f, const std::map<VarId, XPoly>& assignment) {
    std::map<VarCode, XPoly> images;
    for (const auto& [v, img] : assignment) images.emplace(encode(v), img);
    for (VarCode c : f.variables())
        if (!images.count(c)) throw InvalidInput("substitution leaves " + decode(c).key() + " unassigned");
    return f.substitute(images);
}

bool tuple_less(const ExponentTuple& a, const ExponentTuple& b) {
    long sa = std::accumulate(a.begin(), a.end(), 0L);
    long sb = std::accumulate(b.begin(), b.end(), 0L);
    if (sa != sb) return sa < sb;
    size_t n = std::min(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
        int x = a[a.size() - 1 - k];
        int y = b[b.size() - 1 - k];
        if (x != y) return x < y;
    }
    return a.size() < b.size();
}

std::vector<std::pair<ExponentTuple, ParamPoly>> monomial_symmetric_expand(const XPoly& f, int color,
                                                                           int k, char ns) {
    for (VarCode c : f.variables()) {
        VarId v = decode(c);
        if (v.ns != ns || v.color != color || v.slot < 1 || v.slot > k)
            throw InvalidInput("monomial_symmetric_expand: foreign variable " + v.key());
    }
    if (!is_symmetric_in(f, ns, color, k))
        throw InvalidInput("monomial_symmetric_expand: input is not symmetric");
    std::vector<std::pair<ExponentTuple, ParamPoly>> out;
    for (const auto& [m, c] : f.coefficients()) {
        ExponentTuple r(k);
        for (int s = 1; s <= k; ++s) r[s - 1] = m.exponent(encode(VarId{ns, color, s}));
        if (std::is_sorted(r.begin(), r.end())) out.emplace_back(r, c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return tuple_less(b.first, a.first); });
    return out;
}

XPoly monomial_symmetric(const ExponentTuple& r, int color, char ns) {
    ExponentTuple e = r;
    std::sort(e.begin(), e.end());
    std::vector<XPoly::Term> terms;
    do {
        Mono m;
        for (size_t s = 0; s < e.size(); ++s)
            m.set(encode(VarId{ns, color, static_cast<int>(s) + 1}), e[s]);
        terms.emplace_back(m, Rational(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return XPoly::from_terms(std::move(terms));
}

}  // namespace qsa
