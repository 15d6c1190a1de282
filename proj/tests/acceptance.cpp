// Acceptance suite: the full cross-check battery at its pinned sizes, one
// pass/fail line per criterion. Everything is exact integer arithmetic;
// there are no tolerances. Exit status 0 iff every line passes.
//
// Criterion 7 demands the literal row-excluded inequality from the addition
// cascade and is expected red: that inequality is false for k = 1 (smallest
// case: row 2 of (1)), where the displaced 1-hook slides into the worked
// row. The supplementary line right after it sweeps the corrected bound,
// which holds everywhere.

#include <algorithm>
#include <cstdio>
#include <vector>

#include "hookmax/parallel.hpp"
#include "hookmax/verification.hpp"

int main() {
    hookmax::VerifyOptions opts;  // defaults pin the full battery
    opts.threads = std::min(4, hookmax::default_thread_count());
    opts.strict_cascade_sweep = true;
    std::vector<hookmax::CheckResult> results = hookmax::run_verification(opts);
    int failures = 0;
    bool only_documented_failure = true;
    for (const hookmax::CheckResult& r : results) {
        if (r.criterion > 0)
            std::printf("[%s] criterion %d: %s (%s)\n", r.pass ? "PASS" : "FAIL",
                        r.criterion, r.name.c_str(), r.detail.c_str());
        else
            std::printf("[%s] supplementary: %s (%s)\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.detail.c_str());
        if (!r.pass) {
            ++failures;
            if (r.criterion != 7 ||
                r.detail.find("addition inequality failed at 1 row 2 k=1") ==
                    std::string::npos)
                only_documented_failure = false;
        }
    }
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    if (failures == 1 && only_documented_failure) {
        std::printf("acceptance: criteria pass except the documented "
                    "criterion-7 strict sweep (see README)\n");
        return 1;
    }
    std::printf("acceptance: FAILURES present\n");
    return 1;
}
