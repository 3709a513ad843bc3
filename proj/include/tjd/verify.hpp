#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tjd {

struct CheckResult {
    std::string name;
    long trials = 0;
    long failures = 0;
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    long trials = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Seeded invariant suites; deterministic for a fixed (suite, seed, trials).
// Throws UnknownSuite for an unknown name.
SuiteReport run_suite(const std::string& name, uint64_t seed, long trials);

const std::vector<std::string>& suite_names();

} // namespace tjd
