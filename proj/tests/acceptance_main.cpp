// Acceptance gate: runs the full end-to-end check suite and prints one
// verdict line per check.  Exits non-zero when any check fails, so it plugs
// straight into ctest.  Pass --quick for the reduced sweeps.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "critcyc/checks.hpp"

int main(int argc, char** argv) {
    critcyc::CheckOptions opt;
    opt.full = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            opt.full = false;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            opt.seed = static_cast<unsigned>(std::stoul(argv[++i]));
        } else {
            std::cerr << "usage: " << argv[0] << " [--quick] [--seed N]\n";
            return 2;
        }
    }

    const auto results = critcyc::run_all_checks(opt);
    int failed = 0;
    double total = 0.0;
    for (const critcyc::CheckResult& r : results) {
        if (!r.passed) ++failed;
        total += r.seconds;
        std::printf("[%s] %2d %-32s (%6.2fs)  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
    }
    std::printf("%d/%d checks passed in %.2fs (%s mode)\n",
                static_cast<int>(results.size()) - failed, static_cast<int>(results.size()),
                total, opt.full ? "full" : "quick");
    return failed == 0 ? 0 : 1;
}
