// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

namespace patchkit {

/// Vacuum electromagnetic constants (SI, CODATA). All formulas in the
/// library derive the speed of light from this set.
struct PhysicalConstants {
    double c = 299792458.0;          // m/s
    double eps0 = 8.8541878128e-12;  // F/m
    double mu0 = 1.25663706212e-6;   // H/m
};

inline constexpr PhysicalConstants physical_constants{};

inline constexpr double speed_of_light = 299792458.0;       // m/s
inline constexpr double free_space_impedance = 376.730313668;  // ohm

} // namespace patchkit
