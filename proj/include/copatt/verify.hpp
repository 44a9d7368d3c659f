#pragma once

#include <string>
#include <vector>

namespace copatt {

struct CheckResult {
    std::string name;
    std::string range;           // the parameter range that was exercised
    bool pass = false;
    std::string counterexample;  // canonical text of the first failure, if any
    double ms = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;  // sorted by name
    bool all_pass() const;
};

struct VerifyOptions {
    int max_n = 0;  // 0 keeps each check's default bound
};

std::vector<std::string> verify_suites();  // includes "all"

/// Runs the named suite's checks; the report is sorted by check name.
/// Resource-cap violations propagate as cap_error.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts);

}  // namespace copatt
