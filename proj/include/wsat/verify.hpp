#pragma once

#include <string>
#include <vector>

#include "wsat/solver.hpp"

namespace wsat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

struct VerifyParams {
    int v = 5;       // thm5 pattern order
    int delta = 3;   // thm5 minimum degree
    int n_max = -1;  // range cap where applicable
    SolveOptions solve;
};

std::vector<std::string> verify_suite_names();

/// Desk-scale check suite for one named result:
/// thm1 | thm2 | thm5 | thm6 | thm7 | thm8 | claim4 | claim6 | claim7 | k9.
SuiteResult run_verify_suite(const std::string& name, const VerifyParams& params = {});

std::string to_json(const SuiteResult& r);

} // namespace wsat
