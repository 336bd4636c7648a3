#pragma once

// The invariant suite behind `ascent verify all`.

#include <string>
#include <vector>

namespace ascent {

struct CheckResult {
    std::string module;
    std::string name;
    bool passed = false;
    bool internal_error = false;  // an InternalError escaped the check
    std::string detail;
};

struct VerifyOptions {
    bool fast = false;  // Plain n <= 5, m = 2 families n <= 3, series order 12
};

std::vector<std::string> check_names(const VerifyOptions& opt);

// Runs every check concurrently; results come back in check_names() order.
std::vector<CheckResult> run_verify_suite(const VerifyOptions& opt);

}  // namespace ascent
