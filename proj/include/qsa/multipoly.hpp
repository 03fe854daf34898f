#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsa/ring.hpp"

namespace qsa {

// A colored variable: x_{i,r}, y_{beta,s}, z_{beta,i}, or the scratch
// namespace t used by wheel substitutions and the formal variable of zeta.
struct VarId {
    char ns = 'x';
    int color = 1;
    int slot = 1;

    friend bool operator==(const VarId&, const VarId&) = default;
    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string key() const;  // "x:1:2"
    static VarId parse(const std::string& key);
};

inline VarId xvar(int color, int slot) { return {'x', color, slot}; }
inline VarId yvar(int root, int slot) { return {'y', root, slot}; }
inline VarId zvar(int root, int slot) { return {'z', root, slot}; }
inline VarId tvar(int slot = 1) { return {'t', 0, slot}; }

using VarCode = std::uint16_t;
VarCode encode(const VarId& v);
VarId decode(VarCode c);

// Monomial: parameter exponents plus up to kCapacity colored variables.
class Mono {
public:
    static constexpr int kCapacity = 16;
    struct Entry {
        VarCode code;
        std::int16_t exp;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    Mono() = default;
    explicit Mono(const PExp& p) : params_(p) {}

    const PExp& params() const { return params_; }
    PExp& params() { return params_; }
    int size() const { return size_; }
    const Entry& entry(int k) const { return entries_[k]; }
    const Entry* begin() const { return entries_.data(); }
    const Entry* end() const { return entries_.data() + size_; }

    int exponent(VarCode c) const;
    void set(VarCode c, int e);
    Mono without_params() const;

    Mono& operator*=(const Mono& o);
    friend Mono operator*(Mono a, const Mono& b) { return a *= b; }
    friend bool operator==(const Mono& a, const Mono& b);
    // Variables first (lexicographic on (code, exponent) entries), then parameters.
    friend bool operator<(const Mono& a, const Mono& b);
    std::size_t hash() const;

private:
    PExp params_{0, 0};
    std::uint8_t size_ = 0;
    std::array<Entry, kCapacity> entries_{};
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const { return m.hash(); }
};

// Sparse Laurent polynomial in colored variables with parameter coefficients.
// Parameter exponents live inside each Mono; coefficients() regroups them.
class XPoly {
public:
    using Term = std::pair<Mono, Rational>;

    XPoly() = default;
    XPoly(const ParamPoly& c);  // NOLINT
    XPoly(const Rational& c) : XPoly(ParamPoly(c)) {}  // NOLINT
    XPoly(long c) : XPoly(ParamPoly(c)) {}  // NOLINT

    static XPoly var(const VarId& v, int exp = 1);
    static XPoly monomial(const Mono& m, const Rational& c = 1);
    static XPoly from_terms(std::vector<Term> terms);
    static XPoly from_coefficients(const std::vector<std::pair<Mono, ParamPoly>>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Terms grouped by variable part; each key has zero parameter exponents.
    std::vector<std::pair<Mono, ParamPoly>> coefficients() const;
    // Coefficient of a variable monomial (parameters of `m` are ignored).
    ParamPoly coefficient(const Mono& m) const;
    bool is_constant() const;  // no colored variables
    ParamPoly constant_value() const;

    std::vector<VarCode> variables() const;
    std::pair<int, int> degree_range(VarCode c) const;  // {min, max}
    bool uses(VarCode c) const;
    bool has_negative_exponents() const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const XPoly& o);
    XPoly& operator*=(const ParamPoly& c);
    XPoly& operator*=(const Rational& c);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const ParamPoly& c) { return a *= c; }
    friend XPoly operator*(XPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    XPoly pow(int k) const;  // negative k only for single terms

    // Bijective renaming of variables; unmapped variables are kept.
    XPoly relabel(const std::map<VarCode, VarCode>& perm) const;
    // Simultaneous substitution; unmapped variables are kept.
    XPoly substitute(const std::map<VarCode, XPoly>& images) const;
    // Maps every parameter monomial through `fn` (coefficient ring change).
    XPoly map_params(const std::function<ParamPoly(const PExp&)>& fn) const;

    // Quotient by (u - L) where L does not involve u, if exact.
    std::optional<XPoly> divide_linear(VarCode u, const XPoly& L) const;
    // Quotient by a parameter polynomial, coefficientwise, if exact.
    std::optional<XPoly> divide_scalar(const ParamPoly& d) const;
    // gcd of all parameter coefficients (monomial content ignored).
    ParamPoly content() const;

    std::string to_string(ParamSet ps = ParamSet::V) const;

private:
    std::vector<Term> terms_;
    void normalize();
};

// ------------------------------------------------------------ symmetrization

// Limit on the number of summands produced by a symmetrization.
std::uint64_t symmetrization_guard();
void set_symmetrization_guard(std::uint64_t limit);
// Throws GuardExceeded if prod(n_i!) exceeds the limit.
void check_guard(const std::vector<int>& block_sizes);

// (1/prod k_i!) sum over prod S_{k_i} of permuted f, signed on skew colors.
XPoly symmetrize(const XPoly& f, const std::vector<int>& grading, const std::set<int>& skew_colors);

// Strict substitution: every variable of f must be assigned.
XPoly substitute(const XPoly& f, const std::map<VarId, XPoly>& assignment);

// Swap of two variables.
XPoly transpose(const XPoly& f, const VarId& a, const VarId& b);

// Symmetric (or skew) under every transposition of the first k slots of `color`.
bool is_symmetric_in(const XPoly& f, char ns, int color, int k, bool skew = false);

using ExponentTuple = std::vector<int>;

// Exponent tuples are ranked by total degree, then by comparing entries from
// the largest downwards; the rank-one peeling uses the same rule.
bool tuple_less(const ExponentTuple& a, const ExponentTuple& b);

// Coefficients of f in the monomial symmetric basis m_{r_1 <= ... <= r_k},
// listed from the largest tuple downwards.
std::vector<std::pair<ExponentTuple, ParamPoly>> monomial_symmetric_expand(const XPoly& f, int color,
                                                                           int k, char ns = 'x');
// m_r in variables ns:color:1..k.
XPoly monomial_symmetric(const ExponentTuple& r, int color, char ns = 'x');

}  // namespace qsa
