// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.
#include <cstdio>

#include "levymix/verify.hpp"

int main() {
    const auto results = levymix::verify::run_suite("acceptance");
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s %s  [%.2fs]\n    %s\n", r.pass ? "[PASS]" : "[FAIL]",
                    r.name.c_str(), r.seconds, r.detail.c_str());
        failures += !r.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures ? 1 : 0;
}
