#pragma once

#include <string>
#include <vector>

namespace hyperclass {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Names of the full verification battery (the acceptance criteria).
std::vector<std::string> verification_names();

/// Runs one named verification.
CheckResult run_verification(const std::string& name);

/// Runs every verification whose name contains the filter (all when empty).
std::vector<CheckResult> run_verifications(const std::string& filter = "");

} // namespace hyperclass
