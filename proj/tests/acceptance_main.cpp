// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion ids may be passed as arguments to run a subset.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "latticehom/acceptance.hpp"

int main(int argc, char** argv) {
    latticehom::AcceptanceConfig cfg;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) {
            cfg.threads = std::atoi(argv[++i]);
        } else {
            cfg.only.push_back(std::atoi(arg.c_str()));
        }
    }
    auto results = latticehom::run_acceptance(cfg);
    bool ok = latticehom::all_passed(results);
    for (auto& r : results) {
        const char* status = r.pass ? "PASS" : (r.inconclusive ? "INCONCLUSIVE" : "FAIL");
        std::printf("C%02d %s (%.1fs) %s%s%s\n", r.id, status, r.seconds,
                    r.name.c_str(), r.pass ? ": " : " -- ", r.detail.c_str());
    }
    std::printf("acceptance: %s\n", ok ? "ALL PASS" : "FAILURES");
    return ok ? 0 : 1;
}
