#pragma once

#include <stdexcept>
#include <string>

namespace twinrow {

// Broken mathematical invariant inside the kernel (a bug, not bad input).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Exact division left a nonzero remainder.
class DivisibilityError : public InvariantError {
public:
    using InvariantError::InvariantError;
};

// Two routes that must agree produced different values.
class RouteMismatch : public InvariantError {
public:
    using InvariantError::InvariantError;
};

} // namespace twinrow
