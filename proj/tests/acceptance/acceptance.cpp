#include <cstdio>
#include <string>

#include "hyperclass/verify.hpp"

// Runs every acceptance criterion and prints one pass/fail line per check.
// An optional argument restricts the run to checks whose name contains it.
int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    auto results = hyperclass::run_verifications(filter);
    bool all_pass = !results.empty();
    double total = 0;
    for (const auto& res : results) {
        all_pass = all_pass && res.pass;
        total += res.seconds;
        std::printf("%s  %-42s (%6.1fs)  %s\n", res.pass ? "PASS" : "FAIL",
                    res.name.c_str(), res.seconds, res.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s  %zu checks in %.1fs\n", all_pass ? "ALL PASS" : "FAILURES",
                results.size(), total);
    return all_pass ? 0 : 1;
}
