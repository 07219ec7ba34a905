#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace loopslice::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CriterionResult> results;
    bool all_pass() const;
};

/// Runs every acceptance criterion at the given seed and working precision.
Report run_all(std::uint64_t seed, long precision);

/// One "[PASS]/[FAIL] criterion N: name -- detail" line per criterion.
void print(const Report& r, std::ostream& os);

} // namespace loopslice::acceptance
