// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// on any failure.

#include <cstdint>
#include <cstring>
#include <iostream>

#include "loopslice/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    long precision = 8;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);
        if (std::strcmp(argv[i], "--precision") == 0)
            precision = std::strtol(argv[i + 1], nullptr, 10);
    }
    const auto report = loopslice::acceptance::run_all(seed, precision);
    loopslice::acceptance::print(report, std::cout);
    if (!report.all_pass()) {
        std::cout << "acceptance: FAILED\n";
        return 1;
    }
    std::cout << "acceptance: all criteria passed (seed " << seed << ", precision " << precision
              << ")\n";
    return 0;
}
