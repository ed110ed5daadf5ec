#pragma once

#include <string>
#include <vector>

namespace rookpath {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // minimal counterexample on failure, empty otherwise
};

/// Runs one of the cross-module invariant suites: "pi-chi", "phi", "words",
/// "series", or "all". Exhaustive checks run up to min(max_n, their intended
/// bound). Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& suite, int max_n);

}  // namespace rookpath
