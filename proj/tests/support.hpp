#pragma once

// Random generators shared by the property tests. Seeds are fixed so that
// every run explores the same cases.

#include <cstdlib>
#include <map>
#include <random>
#include <vector>

#include "qsa/multipoly.hpp"
#include "qsa/ring.hpp"

namespace qsa::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    Rational rational(int span = 5) {
        int num = uniform(-span, span);
        int den = uniform(1, 3);
        return make_rational(num, den);
    }

    Rational nonzero_rational(int span = 5) {
        Rational r;
        do r = rational(span);
        while (r == 0);
        return r;
    }

    // Laurent polynomial in the first `nparams` parameters.
    ParamPoly param_poly(int nparams = 1, int terms = 3, int lo = -3, int hi = 3) {
        std::vector<ParamPoly::Term> t;
        int count = uniform(0, terms);
        for (int k = 0; k < count; ++k) {
            PExp e{0, 0};
            for (int p = 0; p < nparams; ++p) e[p] = uniform(lo, hi);
            t.emplace_back(e, rational());
        }
        return ParamPoly::from_terms(std::move(t));
    }

    ParamPoly nonzero_param_poly(int nparams = 1, int terms = 3, int lo = -3, int hi = 3) {
        ParamPoly p;
        do p = param_poly(nparams, terms, lo, hi);
        while (p.is_zero());
        return p;
    }

    // Polynomial in x-variables of the given grading.
    XPoly xpoly(const std::vector<int>& grading, int terms = 4, int lo = 0, int hi = 2, int nparams = 1) {
        XPoly out;
        int count = uniform(1, terms);
        for (int k = 0; k < count; ++k) {
            XPoly m(param_poly(nparams, 2));
            for (size_t c = 0; c < grading.size(); ++c)
                for (int s = 1; s <= grading[c]; ++s)
                    m *= XPoly::var(xvar(static_cast<int>(c) + 1, s), uniform(lo, hi));
            out += m;
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

// Numeric evaluation at a rational point; parameters take p0, p1.
inline Rational evaluate(const XPoly& f, const std::map<VarCode, Rational>& point, const Rational& p0,
                         const Rational& p1 = 1) {
    auto power = [](const Rational& base, int e) {
        Rational out = 1;
        for (int k = 0; k < std::abs(e); ++k) out *= base;
        return e < 0 ? Rational(1 / out) : out;
    };
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational term = c * power(p0, m.params()[0]) * power(p1, m.params()[1]);
        for (const auto& e : m) term *= power(point.at(e.code), e.exp);
        total += term;
    }
    return total;
}

inline ParamPoly v(int power = 1) { return ParamPoly::param(0, power); }
inline XPoly x(int color, int slot, int power = 1) { return XPoly::var(xvar(color, slot), power); }

}  // namespace qsa::testing
