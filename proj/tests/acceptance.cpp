// Runs the full validation suite and prints one pass/fail line per criterion.
// Exit code 0 only when every criterion passes.

#include <cstdio>

#include "rmscat/validation.hpp"

int main() {
    const auto results = rmscat::validation::run(true);
    for (const auto& r : results) {
        std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
    }
    const bool ok = rmscat::validation::all_passed(results);
    std::printf("%s: %zu criteria\n", ok ? "ALL PASSED" : "FAILURES PRESENT",
                results.size());
    return ok ? 0 : 1;
}
