#pragma once

#include <stdexcept>
#include <string>

namespace stratahom {

// Bad input: malformed pattern, index out of range, parity mismatch.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but names something that does not exist (empty cell, empty poset).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An internal identity failed (d^2 != 0, chain map broken, ...).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace stratahom
