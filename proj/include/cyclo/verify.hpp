#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const;
};

// Suites in canonical order: cyclotomic, ramanujan, newton, two-prime,
// emptiness, bounds30, cayley, symmetric, bijection.
std::vector<std::string> suite_names();

// max_n <= 0 runs the full documented ranges; a positive max_n trims every
// range to min(range, max_n).
SuiteResult run_suite(const std::string& name, std::int64_t max_n = 0);

std::vector<SuiteResult> run_all(std::int64_t max_n = 0);

}  // namespace cyclo::verify
