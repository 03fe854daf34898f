#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsa/multipoly.hpp"
#include "qsa/ring.hpp"

namespace qsa {

enum class Kind { TrigA, TrigTwoParam, TrigSuper, YangA, YangSuper };

// zeta_{i,j}(z) = scale * (z - shift) / (z - 1) for trigonometric kinds with
// z = x_a / x_b, and (z - shift) / z for rational kinds with z = x_a - x_b.
struct Zeta {
    bool trivial = true;
    ParamPoly scale{1};
    ParamPoly shift;

    // Numerator after clearing the denominator (x_a - x_b).
    XPoly numerator(const XPoly& xa, const XPoly& xb, bool additive) const;
};

class Flavor {
public:
    static Flavor trig_a(int n);
    static Flavor two_param(int n);
    static Flavor trig_super(int m, int n);
    static Flavor yang_a(int n);
    static Flavor yang_super(int m, int n);

    Kind kind() const { return kind_; }
    // sl_n for the even kinds; sl(m|n) for the super kinds.
    int n() const { return n_; }
    int m() const { return m_; }
    int rank() const { return is_super() ? m_ + n_ - 1 : n_ - 1; }

    bool is_super() const { return kind_ == Kind::TrigSuper || kind_ == Kind::YangSuper; }
    bool is_yangian() const { return kind_ == Kind::YangA || kind_ == Kind::YangSuper; }
    ParamSet params() const;
    std::optional<int> skew_color() const;
    bool is_skew(int color) const { return is_super() && color == m_; }

    // Symmetric bilinear form on simple roots (c_ij, or its super analog).
    int cartan(int i, int j) const;
    Zeta zeta(int i, int j) const;
    // zeta_{i,j} as a pair (numerator, denominator) in the variable t:0:1.
    std::pair<XPoly, XPoly> zeta_function(int i, int j) const;

    // Multiplicative base of the trigonometric kinds: v, or u1/u2.
    ParamPoly base() const;
    // (v - v^-1), (u1/u2 - u2/u1) or h.
    ParamPoly normalizer() const;
    // v_k of the super kinds: v if k <= m, v^-1 otherwise (v for even kinds).
    ParamPoly color_base(int k) const;

    std::string kind_name() const;  // trig-a, trig-2p, trig-super, yang-a, yang-super
    std::string to_string() const;  // e.g. "trig-super(2|1)"

    void check_color(int i) const;

    friend bool operator==(const Flavor&, const Flavor&) = default;

private:
    Flavor(Kind kind, int m, int n);
    Kind kind_;
    int m_ = 0;
    int n_ = 0;
};

Kind parse_kind(const std::string& name);

// Numerator over the standard pole denominator
// prod_i prod_{r,r'} (x_{i,r} - x_{i+1,r'}).
class ShuffleElement {
public:
    ShuffleElement(Flavor flavor, std::vector<int> grading, XPoly numerator);

    static ShuffleElement unit(const Flavor& flavor);
    static ShuffleElement zero(const Flavor& flavor, std::vector<int> grading);
    // Image of e_{i,r}: x_{i,1}^r.
    static ShuffleElement generator(const Flavor& flavor, int i, int r);

    const Flavor& flavor() const { return flavor_; }
    const std::vector<int>& grading() const { return grading_; }
    const XPoly& numerator() const { return numerator_; }
    int total_degree() const;
    bool is_zero() const { return numerator_.is_zero(); }

    // Standard pole denominator as a polynomial.
    XPoly denominator() const;

    ShuffleElement operator-() const;
    ShuffleElement& operator+=(const ShuffleElement& o);
    ShuffleElement& operator-=(const ShuffleElement& o);
    ShuffleElement& operator*=(const ParamPoly& c);
    friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
    friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
    friend ShuffleElement operator*(ShuffleElement a, const ParamPoly& c) { return a *= c; }
    friend ShuffleElement operator*(const ParamPoly& c, ShuffleElement a) { return a *= c; }
    friend bool operator==(const ShuffleElement& a, const ShuffleElement& b);
    friend bool operator!=(const ShuffleElement& a, const ShuffleElement& b) { return !(a == b); }

private:
    Flavor flavor_;
    std::vector<int> grading_;
    XPoly numerator_;
};

ShuffleElement shuffle_product(const ShuffleElement& F, const ShuffleElement& G);

bool check_pole(const ShuffleElement& F);

// One wheel substitution: variables and their images in terms of t:0:1.
struct WheelPattern {
    std::string kind;  // "first" or "second"
    std::map<VarCode, XPoly> images;
};
std::vector<WheelPattern> wheel_patterns(const Flavor& flavor, const std::vector<int>& grading);
bool check_wheel(const ShuffleElement& F);

// Multiplies the numerator by prod_r (1 - x_{l,r}^{-1}).
ShuffleElement shift_map(const ShuffleElement& F, int l);

// u1^a u2^b -> v^{(a-b)/2}: two-parameter elements to the one-parameter kind.
ShuffleElement degenerate_two_param(const ShuffleElement& F);
ParamPoly degenerate_two_param(const ParamPoly& c);

}  // namespace qsa
