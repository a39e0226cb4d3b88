#pragma once

#include <stdexcept>
#include <string>

namespace spinpoly {

/// Input violated a documented precondition.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured size cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sample matrix nullspace had dimension != 1 (common factors or wrong degree).
struct rank_deficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internally inconsistent data detected mid-computation (a bug, not bad input).
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// A property the construction relies on was falsified by an exact check.
struct property_falsified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative numeric method failed to converge.
struct non_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spinpoly
