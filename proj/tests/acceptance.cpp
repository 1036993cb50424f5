// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails. Kept free of any test framework so the output reads as a
// plain checklist.
#include <cstdio>

#include "idem/selftest.hpp"

int main() {
    int failures = 0;
    auto results = idem::run_acceptance();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const idem::CheckResult& r = results[i];
        std::printf("[%s] %2zu/%zu %s", r.passed ? "PASS" : "FAIL", i + 1,
                    results.size(), r.name.c_str());
        if (!r.detail.empty()) std::printf(" (%s)", r.detail.c_str());
        std::printf("\n");
        if (!r.passed) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
