#include <iostream>

#include "latcol/verify.hpp"

// Runs every acceptance suite and prints one line per suite.
int main() {
    int failures = 0;
    for (const auto& info : latcol::acceptance_suites()) {
        const latcol::SuiteResult r = latcol::run_suite(std::to_string(info.id));
        std::cout << r.line() << std::endl;
        failures += r.passed() ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all acceptance suites passed" : "acceptance failures: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
