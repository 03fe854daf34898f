#pragma once

#include <json.hpp>

#include "qsa/membership.hpp"

namespace qsa {

using Json = nlohmann::json;

// Integers that fit in 64 bits are written as numbers, larger ones as strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// [[exponents, num, den], ...] with one exponent per symbol of the set.
Json to_json(const ParamPoly& p, ParamSet ps);
ParamPoly param_poly_from_json(const Json& j, ParamSet ps);

// [{"vars": {"x:1:1": e, ...}, "coeff": ParamPoly}, ...]
Json to_json(const XPoly& f, ParamSet ps);
XPoly xpoly_from_json(const Json& j, ParamSet ps);

// {"kind": "trig-a", "n": 3} or {"kind": "trig-super", "n": [m, n]}
Json to_json(const Flavor& flavor);
Flavor flavor_from_json(const Json& j);

// {"flavor": ..., "grading": [...], "numerator": XPoly}
Json to_json(const ShuffleElement& F);
ShuffleElement element_from_json(const Json& j);

// [{"root": [j, i], "r": r, "mult": m}, ...]
Json to_json(const PbwdMonomial& h);
PbwdMonomial monomial_from_json(const Json& j, const Flavor& flavor);

// {"recipes": [{"root", "colors", "offsets", "carrier", "lambdas"}], "descending": [[j, i], ...]}
Json to_json(const PbwdChoice& choice);
PbwdChoice choice_from_json(const Json& j, const Flavor& flavor);

// {"d": [[j, i, mult], ...], "t": {"j:i": [...]}}, plus "slots" for a
// non-canonical assignment.
Json to_json(const SpecPlan& plan, const Flavor& flavor);
SpecPlan plan_from_json(const Json& j, const Flavor& flavor);

// {"num": ParamPoly, "den": ParamPoly}
Json to_json(const ParamFrac& c, ParamSet ps);
ParamFrac param_frac_from_json(const Json& j, ParamSet ps);

// {"flavor": ..., "choice": ..., "entries": [{"monomial", "coeff"}]}
Json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const Json& j);

}  // namespace qsa
