// Acceptance gate: one line per headline criterion, PASS or FAIL, with the
// measured numbers. The exit status is the number of failing criteria, so a
// clean build exits 0 and any red line fails the suite.

#include <iostream>

#include "qentropy/verify.hpp"

int main() {
    const auto results = qentropy::verify::run_all();
    const int failures = qentropy::verify::print_report(results, std::cout);
    if (failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << failures << " of " << results.size() << " criteria failed\n";
    }
    return failures;
}
