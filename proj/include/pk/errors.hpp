#pragma once

#include <stdexcept>
#include <string>

namespace pk {

/// Malformed or out-of-contract input (bad rational text, dimension mismatch,
/// zero conditioning event, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured work bound (subset budget, oracle scale) would be exceeded.
/// Raised instead of returning a possibly wrong answer.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pk
