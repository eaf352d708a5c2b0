// Acceptance suite: runs every verification criterion at its stated scale
// and prints one pass/fail line per criterion.
#include <cstdio>
#include <exception>

#include "weylmod/verify.hpp"

int main() {
    int failures = 0;
    for (int c = 1; c <= 11; ++c) {
        weylmod::CheckResult r;
        try {
            r = weylmod::run_criterion(c);
        } catch (const std::exception& e) {
            r = {c, "criterion crashed", "", false, e.what()};
        }
        std::printf("[%s] %2d. %s (%s)%s%s\n", r.pass ? "PASS" : "FAIL", r.criterion,
                    r.name.c_str(), r.scale.c_str(), r.pass ? "" : " — ",
                    r.pass ? "" : r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
