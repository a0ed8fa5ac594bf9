#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latcol/matrix.hpp"
#include "latcol/opspaces.hpp"

namespace latcol {

struct SuiteResult {
    int id = 0;
    std::string name;
    bool correct = false;     // every check in the suite held
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;       // counts on success, the first failure otherwise

    [[nodiscard]] bool passed() const { return correct && seconds <= limit_seconds; }
    [[nodiscard]] std::string line() const;
};

struct SuiteInfo {
    int id;
    std::string name;
    double limit_seconds;
};

/// The acceptance suites, in run order.
[[nodiscard]] const std::vector<SuiteInfo>& acceptance_suites();

/// Runs one suite, selected by number ("4") or name.
/// Throws InputError for an unknown selector.
[[nodiscard]] SuiteResult run_suite(const std::string& selector);
[[nodiscard]] std::vector<SuiteResult> run_all_suites();

/// Random element of the space with coefficients in [-bound, bound]; when
/// `rational` is set, coefficients are small fractions instead.
[[nodiscard]] Matrix random_element(const OperatorSpace& space, std::mt19937_64& rng, int bound = 3,
                                    bool rational = false);
/// Invertible random element, or nullopt after `attempts` singular draws.
[[nodiscard]] std::optional<Matrix> random_invertible_element(const OperatorSpace& space, std::mt19937_64& rng,
                                                              int attempts = 64, bool rational = false);

}  // namespace latcol
