#pragma once

#include <string>
#include <vector>

namespace latticehom {

struct AcceptanceConfig {
    long long groupsum_cap = 10'000'000;
    size_t element_cap = 1u << 16;
    int threads = 1;
    unsigned sample_seed = 20260810;
    std::vector<int> only;  // run only these criterion ids (empty = all)
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool inconclusive = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the acceptance criteria and returns one result per criterion, in id
// order.  Exceptions inside a criterion are caught and reported as failures.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

bool all_passed(const std::vector<CriterionResult>& results);
std::string acceptance_summary_json(const std::vector<CriterionResult>& results);

}  // namespace latticehom
