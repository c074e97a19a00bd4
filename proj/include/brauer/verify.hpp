#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

struct SuiteReport {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            failures.push_back(what);
        }
    }
    bool ok() const { return failed == 0; }
};

std::vector<std::string> suite_names();

/// Runs one of the named invariant suites: cocycle, norms, ramification,
/// invariants, global. Deterministic for a fixed seed.
SuiteReport run_suite(const std::string& name, uint64_t seed = 1);

}  // namespace brauer
