#pragma once

#include <string>
#include <vector>

namespace levymix::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Suites: specfun, laws, process, mixture, triplet, simulate, acceptance.
/// "all" runs every suite in that order.
std::vector<std::string> suite_names();

std::vector<CheckResult> run_suite(const std::string& name);

bool all_passed(const std::vector<CheckResult>& results);

/// Pass/fail table. Timings are off by default so repeated runs with fixed
/// seeds render byte-identically.
std::string render(const std::vector<CheckResult>& results, bool timings = false);

}  // namespace levymix::verify
