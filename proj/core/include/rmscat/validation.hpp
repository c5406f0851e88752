#pragma once

#include <string>
#include <vector>

namespace rmscat::validation {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst observed value vs. threshold
};

/// Runs the acceptance checks. The fast preset covers the closed-form
/// identities; full adds the ODE-oracle cross-checks and the transform
/// round trip.
std::vector<CheckResult> run(bool full);

/// True when every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rmscat::validation
