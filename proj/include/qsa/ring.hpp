#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsa {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Formal parameters of a flavor: {v}, {u1, u2} or {h}.
enum class ParamSet { V, U, H };

int param_count(ParamSet ps);
std::vector<std::string> param_symbols(ParamSet ps);

// Exponent vector of a parameter monomial. Unused slots stay 0.
using PExp = std::array<int, 2>;

PExp operator+(const PExp& a, const PExp& b);
PExp operator-(const PExp& a, const PExp& b);
PExp operator-(const PExp& a);

// Laurent polynomial in at most two parameters over Q.
class ParamPoly {
public:
    using Term = std::pair<PExp, Rational>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT: constants convert implicitly
    ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT

    static ParamPoly monomial(const PExp& e, const Rational& c = 1);
    // Single parameter p_idx raised to `power`.
    static ParamPoly param(int idx, int power = 1);
    static ParamPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;  // no negative exponents
    const std::vector<Term>& terms() const { return terms_; }

    // Terms are kept sorted by exponent; the leading term is the largest.
    const Term& leading() const;
    Rational constant_term() const;
    PExp min_exponents() const;
    PExp max_exponents() const;
    // Highest exponent of one parameter (0 for the zero polynomial).
    int degree_in(int idx) const;
    int low_degree_in(int idx) const;
    bool uses(int idx) const;

    ParamPoly shifted(const PExp& e) const;  // multiply by a monomial
    ParamPoly pow(int k) const;              // negative k only for monomials
    ParamPoly operator-() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b);
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
    // Arbitrary but total; used for canonical sorting.
    friend bool operator<(const ParamPoly& a, const ParamPoly& b);

    // Substitute parameter monomials: p_idx -> images[idx] (each a monomial
    // times a rational). Requires integral results.
    ParamPoly substitute_monomials(const std::vector<ParamPoly>& images) const;

    std::string to_string(ParamSet ps = ParamSet::V) const;

private:
    std::vector<Term> terms_;
    void normalize();
};

// [k]_v = v^{k-1} + v^{k-3} + ... + v^{1-k}; for ParamSet::U the base is u1/u2.
ParamPoly qint(int k, ParamSet ps = ParamSet::V);
ParamPoly qfact(int k, ParamSet ps = ParamSet::V);

// q such that a = q*b in the Laurent ring, if it exists.
std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);

// Greatest common divisor of two polynomials (monomial content ignored),
// normalized to leading coefficient 1. gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

// Element of the fraction field of the parameter ring.
class ParamFrac {
public:
    ParamFrac() : num_(), den_(1) {}
    ParamFrac(const ParamPoly& num);  // NOLINT
    ParamFrac(const Rational& c) : ParamFrac(ParamPoly(c)) {}  // NOLINT
    ParamFrac(long c) : ParamFrac(ParamPoly(c)) {}  // NOLINT
    ParamFrac(const ParamPoly& num, const ParamPoly& den);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    // True when the value lies in the Laurent ring.
    bool is_laurent() const { return den_.is_constant(); }

    ParamFrac operator-() const;
    ParamFrac& operator+=(const ParamFrac& o);
    ParamFrac& operator-=(const ParamFrac& o);
    ParamFrac& operator*=(const ParamFrac& o);
    ParamFrac& operator/=(const ParamFrac& o);
    friend ParamFrac operator+(ParamFrac a, const ParamFrac& b) { return a += b; }
    friend ParamFrac operator-(ParamFrac a, const ParamFrac& b) { return a -= b; }
    friend ParamFrac operator*(ParamFrac a, const ParamFrac& b) { return a *= b; }
    friend ParamFrac operator/(ParamFrac a, const ParamFrac& b) { return a /= b; }
    friend bool operator==(const ParamFrac& a, const ParamFrac& b);
    friend bool operator!=(const ParamFrac& a, const ParamFrac& b) { return !(a == b); }

    std::string to_string(ParamSet ps = ParamSet::V) const;

private:
    ParamPoly num_;
    ParamPoly den_;
    void normalize();
};

}  // namespace qsa
