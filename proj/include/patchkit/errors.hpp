// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace patchkit {

/// Thrown when a design-spec document fails validation. The message names
/// the offending field and the violated constraint.
class spec_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_positive(double value, const char* name) {
    if (!(value > 0.0))
        throw std::domain_error(std::string(name) + " must be > 0 (got " +
                                std::to_string(value) + ")");
}

inline void check_nonnegative(double value, const char* name) {
    if (!(value >= 0.0))
        throw std::domain_error(std::string(name) + " must be >= 0 (got " +
                                std::to_string(value) + ")");
}

inline void check_finite(double value, const char* name) {
    if (!std::isfinite(value))
        throw std::domain_error(std::string(name) + " must be finite");
}

} // namespace patchkit
