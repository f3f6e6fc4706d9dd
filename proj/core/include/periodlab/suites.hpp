#pragma once

#include <string>
#include <vector>

namespace periodlab::suites {

struct CriterionResult {
    std::string id;
    std::string description;
    bool pass = false;
    double metric = 0.0;    // worst residual observed (0 for exact checks)
    double tolerance = 0.0; // pinned threshold (0 = exact)
    double seconds = 0.0;
    double time_limit = 0.0; // seconds; 0 = none

    std::string line() const;
};

/// Acceptance criteria 1..9; thresholds are pinned here, not configurable.
CriterionResult run_criterion(int k);

/// Named verify suites for the CLI: beta, double-copy, twisted, coaction,
/// fl-agreement, hyp2f1. coaction accepts (n, degree) overrides.
std::vector<CriterionResult> run_suite(const std::string& name, int n_override = 0,
                                       int degree_override = 0);

std::vector<std::string> suite_names();

} // namespace periodlab::suites
