#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plm {

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string summary;
};

int criterion_count();
CriterionResult run_criterion(int id);

// Runs every criterion, printing one PASS/FAIL line each as it finishes. True if all pass.
bool run_acceptance(std::ostream& os, std::vector<int> const& only = {});

}  // namespace plm
