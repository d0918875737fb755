#pragma once

#include <string>
#include <vector>

#include "freearr/classes.hpp"

namespace freearr {

struct ClaimReport {
    std::string id;
    std::string anchor;   // human-readable description of the claim
    std::string verdict;  // "pass", "fail", "undecided"
    double seconds = 0.0;
    std::string detail;   // first failing subcheck, empty on pass
    Json artifact;        // certificates / traces backing the verdict
};

struct BatteryConfig {
    std::vector<std::string> only;  // claim ids to run; empty = all
    long long budget = -1;          // -1 = decider default (FREEARR_BUDGET aware)
};

// The claim ids, in battery order.
std::vector<std::string> battery_claims();

// Runs the claims sequentially in dependency order; failures are reported,
// never thrown.
std::vector<ClaimReport> verify_paper(const BatteryConfig& config = {});

// 0 all pass, 2 any fail, 3 undecided but nothing failed.
int battery_exit_code(const std::vector<ClaimReport>& reports);

}  // namespace freearr
