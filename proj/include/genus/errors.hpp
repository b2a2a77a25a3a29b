#pragma once

#include <stdexcept>
#include <string>

namespace genus {

/// Malformed or out-of-contract input (bad JSON field, dimension mismatch,
/// precondition violation). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold by construction failed. Never thrown
/// for well-formed data unless the implementation itself is wrong.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace genus
