#pragma once

#include <string>
#include <vector>

#include "segcap/curve.hpp"

namespace segcap {

struct CheckResult {
    std::string name;
    bool pass = false;
    double err = 0.0;       // observed deviation
    double tolerance = 0.0; // threshold it was held against
};

struct VerifyOptions {
    QuadratureConfig cfg;            // nodes / tolerances to run with
    std::vector<int> divisor;        // optional override for the cross-check
    std::vector<int> orders{2, 3, 4}; // which preimage families to exercise
};

// Self-contained consistency battery: reproduces the closed-form capacities
// of the Chebyshev preimage families, cross-checks Green values against the
// polynomial oracle, and spot-checks the series engine's symmetries on the
// computed period matrices.  Intended for end users via the CLI.
std::vector<CheckResult> run_verify_battery(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace segcap
