#pragma once

// The acceptance suite: every headline property of the toolkit, bundled so
// one invocation reproduces every claim. Shared by the `qentropy verify`
// subcommand and the standalone acceptance test binary.

#include <ostream>
#include <string>
#include <vector>

namespace qentropy::verify {

struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

// Runs checks 1..12 in order. Deterministic: all randomized checks use fixed
// seeds and fixed draw schemes.
std::vector<CheckResult> run_all();

// One line per check; returns the number of failures.
int print_report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace qentropy::verify
