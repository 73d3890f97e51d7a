#pragma once

#include <stdexcept>
#include <string>

namespace qap {

/// Input violates a documented precondition.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size guard.
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

/// An internal postcondition failed. Always a bug.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qap
