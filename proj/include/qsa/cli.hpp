#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsa/ring.hpp"

namespace qsa {

// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFailed = 1,
    kExitUsage = 2,
    kExitGuard = 3,
};

// Runs one qsa invocation; args excludes the program name. JSON results go to
// `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "-1/2*v^-2 + 3", a sum of monomials in the parameters of the set,
// or a JSON parameter polynomial.
ParamPoly parse_param_poly(const std::string& text, ParamSet ps);

}  // namespace qsa
