// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
#include <cstdlib>
#include <iostream>
#include <string>

#include "flagsphere/acceptance.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 0;
    std::string suite = "all";
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        else if (arg == "--suite" && i + 1 < argc) suite = argv[++i];
    }
    bool ok = flagsphere::run_suite(suite, seed, std::cout);
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << std::endl;
    return ok ? 0 : 1;
}
