#include <cstdio>
#include <vector>

#include "nullsolve/selftest.hpp"

// Runs the full acceptance suite and reports one line per check.
// Exit status 0 only when every check passes.
int main() {
    const std::vector<nullsolve::CheckResult> results =
        nullsolve::run_acceptance_suite();
    int passed = 0;
    for (const nullsolve::CheckResult& r : results) {
        std::printf("%s\n", nullsolve::format_check_line(r).c_str());
        if (r.pass) ++passed;
    }
    const int total = static_cast<int>(results.size());
    std::printf("RESULT acceptance = %d/%d %s\n", passed, total,
                passed == total ? "PASS" : "FAIL");
    return passed == total ? 0 : 1;
}
