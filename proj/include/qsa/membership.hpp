#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsa/special.hpp"

namespace qsa {

// ------------------------------------------------------------ rank one

struct RankOneTerm {
    ExponentTuple modes;  // r_1 <= ... <= r_k
    ParamFrac coeff;
};

// Kernel names: trig-sym-minus, trig-sym-plus, skew, yang-sym, and the
// analogs trig-2p, yang-sym-plus, yang-skew.
RankOneModel rank_one_kernel(const std::string& name);

// f in x_{1,1..k}, symmetric (skew for the skew kernels), written as a
// combination of ascending products x^{r_1} * ... * x^{r_k} of the kernel.
std::vector<RankOneTerm> decompose_rank1(const XPoly& f, int k, const RankOneModel& kernel);

// ------------------------------------------------------------ PBWD

struct DecompositionEntry {
    PbwdMonomial monomial;
    ParamFrac coeff;
};

struct Decomposition {
    PbwdChoice choice;
    std::vector<DecompositionEntry> entries;  // sorted by monomial
};

struct DecomposeOptions {
    bool verify = true;
    int max_steps = 100000;
};

// F = sum coeff * psi_monomial(h). Throws DivisionFailure when F violates the
// wheel conditions at some degree vector.
Decomposition decompose(const ShuffleElement& F, const PbwdChoice& choice, const DecomposeOptions& options = {});
// Rebuilds sum coeff * Psi(e_h) scaled by a common denominator: returns
// (numerator element, denominator).
std::pair<ShuffleElement, ParamPoly> reconstruct(const Flavor& flavor, const std::vector<int>& grading,
                                                 const Decomposition& dec);

// ------------------------------------------------------------ predicates

struct PredicateReport {
    bool holds = true;
    std::string detail;  // names the failing degree vector, composition, divisor
};

// Integral form membership. trig-a: the cross specialization test; Yangian
// kinds: divisibility by h^{|k|}; other kinds: the basis test.
PredicateReport integrality_report(const ShuffleElement& F);
bool is_integral(const ShuffleElement& F);
// phi_d(F) divisible by normalizer^{sum d_beta (i - j)} for every d.
PredicateReport goodness_report(const ShuffleElement& F);
bool is_good(const ShuffleElement& F);
// Every PBWD coefficient over the normalized monomials is a Laurent polynomial.
PredicateReport basis_integrality_report(const ShuffleElement& F, const PbwdChoice& choice);
bool is_integral_by_basis(const ShuffleElement& F, const PbwdChoice& choice);

// ------------------------------------------------------------ independence

struct IndependenceReport {
    int monomials = 0;  // number of h
    int rows = 0;       // number of x-monomials
    int rank = 0;
    bool independent = false;
    std::string method;
    std::vector<PbwdMonomial> basis;
    std::vector<ParamFrac> kernel;  // nonzero when dependent
};

IndependenceReport independence_certificate(const Flavor& flavor, const std::vector<int>& grading, int lo, int hi,
                                            const PbwdChoice& choice);

}  // namespace qsa
