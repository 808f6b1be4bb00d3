// Acceptance gate: runs the eight reproduction criteria and prints one
// pass/fail line per criterion. Exit status is the number of failures.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "factorlens/suite.hpp"

int main() {
    long long budget = 20'000'000;
    if (const char* env = std::getenv("FACTORLENS_BUDGET")) {
        try {
            budget = std::stoll(env);
        } catch (const std::exception&) {
            std::fprintf(stderr, "invalid FACTORLENS_BUDGET: %s\n", env);
            return 1;
        }
    }
    int failures = 0;
    for (const auto& r : factorlens::acceptance_suite(budget)) {
        std::printf("[%s] criterion %d: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
        if (!r.pass) ++failures;
    }
    return failures;
}
