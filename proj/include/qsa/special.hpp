#pragma once

#include <string>
#include <vector>

#include "qsa/pbwd.hpp"

namespace qsa {

// d_beta indexed like positive_roots.
using DegreeVector = std::vector<int>;

struct SpecPlan {
    DegreeVector d;
    // assignment[b][s] lists the x-slots used by copy s of root b, one per
    // color j..i. Empty means the canonical assignment.
    std::vector<std::vector<std::vector<int>>> assignment;
    // t[b] is a composition of d[b]; only read by cross_specialize.
    std::vector<std::vector<int>> t;
};

// Sum of d_beta [beta].
std::vector<int> plan_grading(const Flavor& flavor, const DegreeVector& d);
// All d with sum d_beta [beta] = grading, in increasing degree order.
std::vector<DegreeVector> degree_vectors(const Flavor& flavor, const std::vector<int>& grading);
// Slots handed out in root order, copy by copy.
SpecPlan canonical_plan(const Flavor& flavor, const DegreeVector& d);
std::string degree_to_string(const Flavor& flavor, const DegreeVector& d);

// Image of x_{k,.} in terms of y: base^{a_k} y, or y + a_k h/2 for Yangians.
int spec_exponent(const Flavor& flavor, int color);
XPoly spec_image(const Flavor& flavor, int color, const VarId& y);

// Specialization of the numerator.
XPoly phi(const ShuffleElement& F, const SpecPlan& plan);
XPoly phi(const ShuffleElement& F, const DegreeVector& d);

// y_a - base^shift y_b, or y_a - y_b - shift h/2.
struct LinearFactor {
    VarId a;
    VarId b;
    int shift = 0;
    int exponent = 1;
};
XPoly linear_factor(const Flavor& flavor, const LinearFactor& f);
// Quotient by one copy of the factor, if exact.
std::optional<XPoly> divide_by(const Flavor& flavor, const XPoly& p, const LinearFactor& f);

struct GFactors {
    ParamPoly constant{1};
    XPoly monomial{1};
    std::vector<LinearFactor> linear;
};
// Product of the cross-root and in-root factors for degree vector d.
GFactors g_factors(const Flavor& flavor, const DegreeVector& d);
XPoly g_product(const Flavor& flavor, const GFactors& g);
// p / g, or nullopt when some factor does not divide.
std::optional<XPoly> divide_by(const Flavor& flavor, const XPoly& p, const GFactors& g);

// phi(F)/(A B) for the one-parameter trigonometric kind. Throws
// DivisionFailure naming the failing factor.
XPoly reduced_phi(const ShuffleElement& F, const DegreeVector& d, bool printed_b = false);
// Groups of y_{beta,.} of sizes t collapse to v^-2 z, ..., v^-2t z.
XPoly vertical_specialize(const XPoly& K, const Flavor& flavor, const SpecPlan& plan);
XPoly cross_specialize(const ShuffleElement& F, const SpecPlan& plan, bool printed_b = false);

// The rank-one shuffle algebra whose products describe the copies of one
// root: a flavor and the color whose generators are multiplied.
struct RankOneModel {
    Flavor flavor;
    int color;
    std::string name;  // trig-sym-minus, trig-sym-plus, skew, yang-sym, ...
};
RankOneModel rank_one_model(const Flavor& flavor, const Root& root);
// x^{r_1} * ... * x^{r_k} in the model, renamed to y_{root_index,1..k}.
XPoly rank_one_product(const RankOneModel& model, const std::vector<int>& modes, int root_index);

// All compositions of k into positive parts.
std::vector<std::vector<int>> compositions(int k);

}  // namespace qsa
