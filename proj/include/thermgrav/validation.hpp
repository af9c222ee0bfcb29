#pragma once

#include "thermgrav/constants.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace thermgrav {

/// Outcome of one self-validation check: the measured error against its tolerance.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    /// Thins the y-grids and random samples by 10x; tolerances are unchanged.
    bool quick = false;
    unsigned seed = 20080101u;
};

/// Runs the oracle suite: moment identities, quadrature against exact
/// moments, brute Matsubara sums against the closed form, limits, scaling
/// invariance, the range solver and the correction-table shape.
std::vector<CheckResult> run_validation(const PhysicalConstants& consts, const ValidationOptions& options = {});

/// One line per check; returns true iff every check passed.
bool report_validation(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace thermgrav
