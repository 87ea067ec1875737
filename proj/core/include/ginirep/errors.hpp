#pragma once

#include <stdexcept>
#include <string>

namespace ginirep {

/// Precondition violated by the caller (bad shape, mismatched totals, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A computation was refused because its state space is too large.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ginirep
