#pragma once

#include <string>
#include <vector>

namespace omega {

// One verified assertion inside a report: what was expected, what was
// computed, and whether they agree.
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace omega
