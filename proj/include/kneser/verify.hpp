#pragma once

// Named verification suites shared by the CLI `verify` subcommand and the
// acceptance runner: each criterion is a self-contained exact check that
// reports pass/fail with a short diagnostic.

#include <string>
#include <vector>

namespace kneser {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Criterion ids are 1..11; unknown ids throw.
CheckResult run_criterion(int id);

// "spectral" -> {1,2,3}, "mixing" -> {4}, "bounds" -> {5,7,8,9},
// "oracle" -> {6,10}, "all" -> {1..11}; unknown suite throws.
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace kneser
