#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace flagsphere {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Suites: alpha2 {1,2,5}, alpha3 {6}, spheres {3,4,11}, rigidity {7,8},
// bounds {9,10}, all {1..11}.
std::vector<int> suite_criteria(const std::string& suite); // throws InvalidInput

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, uint64_t seed);

// Runs a suite and prints one PASS/FAIL line per criterion; returns true
// when everything passed.
bool run_suite(const std::string& suite, uint64_t seed, std::ostream& out);

} // namespace flagsphere
