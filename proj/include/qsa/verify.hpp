#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsa/membership.hpp"

namespace qsa {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteOptions {
    // Largest k (or total number of variables) to try; 0 picks the suite default.
    int max_k = 0;
    // Mode window; unset picks the suite default. Yangian modes are shifted
    // to start at 0 keeping the window size.
    std::optional<std::pair<int, int>> window;
    // Random cases per flavor; 0 picks the suite default.
    int trials = 0;
    std::uint64_t seed = 20240611;
};

// factorial, combinatorial, relations, closure, roundtrip, integrality,
// two-param-degeneration.
const std::vector<std::string>& suite_names();

// Runs a suite, reporting each check as it completes.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options = {},
                                   const std::function<void(const CheckResult&)>& report = {});

// A relation instantiated at fixed modes: lhs should vanish under Psi.
struct RelationInstance {
    std::string family;
    std::string modes;
    ShuffleElement value;
};

// Every defining relation of the flavor with all mode indices in [lo, hi].
std::vector<RelationInstance> relation_instances(const Flavor& flavor, int lo, int hi);

// sum_i prod_{j != i} (x_j - shift(x_i)) / (x_j - x_i) minus its constant
// value, with denominators cleared: v^-2 x_i for the trigonometric identity,
// x_i - h for the Yangian one.
XPoly combinatorial_residue(int k, bool yangian);

}  // namespace qsa
