#pragma once

#include <string>
#include <vector>

namespace nullsolve {

/// Verdict of one acceptance check: correctness and time budget together.
struct CheckResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
    double budget_ms = 0.0;
};

/// Runs the ten acceptance checks with fixed seeds. Deterministic apart
/// from the measured times; a check fails if it is incorrect, throws, or
/// exceeds its budget.
std::vector<CheckResult> run_acceptance_suite();

/// One aligned report line per check.
std::string format_check_line(const CheckResult& r);

} // namespace nullsolve
