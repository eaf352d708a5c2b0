#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace weylmod {

struct CheckResult {
    int criterion = 0;
    std::string name;
    std::string scale;
    bool pass = false;
    std::string detail;  // first few mismatches on failure
};

// Criteria are numbered 1..11; unknown numbers throw. Raising the budget
// above the default unlocks the optional deep checks (the three-variable
// oracle at n = 4).
CheckResult run_criterion(int criterion, int jobs = 0, long budget = 0);
std::vector<CheckResult> run_criteria(const std::vector<int>& which, int jobs = 0,
                                      long budget = 0);

// Suite names: d1, d2, d3, singular, parking, identity, polyfit, all.
std::vector<int> suite_criteria(const std::string& suite);

nlohmann::json verify_report_json(const std::string& suite, const std::vector<CheckResult>& results);

// Directory with the bundled integer-sequence prefixes: the environment
// variable WEYLMOD_DATA_DIR wins, then the compiled-in source path.
std::string data_dir();

} // namespace weylmod
