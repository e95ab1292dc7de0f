// End-to-end physics checks, shared by the test suite and `qtherm validate`.
// Each check prints nothing; callers format the results.
#pragma once

#include <string>
#include <vector>

namespace qtherm::acceptance {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Run every check whose name contains `filter` (all when empty).
std::vector<CheckResult> run_checks(const std::string& filter = "");

std::vector<std::string> check_names();

}  // namespace qtherm::acceptance
