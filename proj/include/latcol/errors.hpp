#pragma once

#include <stdexcept>
#include <string>

namespace latcol {

// Malformed or inconsistent input data (shapes, file syntax, spectra).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A well-formed request whose mathematical precondition does not hold,
// e.g. a non-nilpotent matrix passed where a nilpotent one is required.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace latcol
