// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include "patchkit/errors.hpp"

namespace patchkit {

/// Board stackup: dielectric between the radiating patch and the ground
/// plane, plus the conductor and the overall radiation efficiency used for
/// gain. All lengths in meters.
struct Substrate {
    double eps_r = 1.0;               // relative permittivity, >= 1
    double height = 0.0;              // dielectric thickness h, m
    double metal_thickness = 0.0;     // conductor thickness, m
    double radiation_efficiency = 1.0;  // in (0, 1]

    void validate() const {
        if (!(eps_r >= 1.0))
            throw std::domain_error("substrate eps_r must be >= 1 (got " +
                                    std::to_string(eps_r) + ")");
        check_positive(height, "substrate height");
        check_nonnegative(metal_thickness, "substrate metal_thickness");
        if (!(radiation_efficiency > 0.0 && radiation_efficiency <= 1.0))
            throw std::domain_error("substrate radiation_efficiency must be in (0, 1]");
    }
};

} // namespace patchkit
