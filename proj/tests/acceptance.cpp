// Runs the full claim battery and fails unless every claim passes.
#include <cstdio>

#include "freearr/battery.hpp"

using namespace freearr;

int main() {
    auto reports = verify_paper();
    bool all_pass = true;
    for (const auto& r : reports) {
        std::printf("%-10s %-18s %8.2fs  %s%s%s\n", r.verdict.c_str(), r.id.c_str(), r.seconds,
                    r.anchor.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
        if (r.verdict != "pass") all_pass = false;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all claims pass" : "ACCEPTANCE: FAILURE");
    return all_pass ? 0 : 1;
}
