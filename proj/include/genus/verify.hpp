#pragma once

#include <string>
#include <vector>

namespace genus {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // first failure, or a short summary on success
};

/// Runs the ten reproduction checks in order. Deterministic: the random
/// property checks use a fixed seed.
std::vector<CriterionResult> run_acceptance_suite();

/// One line per criterion: "[PASS] 1 title: detail".
std::string format_table(const std::vector<CriterionResult> &results);

}  // namespace genus
