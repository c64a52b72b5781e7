// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include "patchkit/radiation_pattern.hpp"
#include "patchkit/synthesis.hpp"

#include <functional>

namespace patchkit {

/// Co-polarized far-field amplitude of a single element, evaluated in the
/// element's own frame (theta from its boresight). Zero below the element's
/// ground plane (theta > pi/2). Intensity is the squared field.
struct ElementModel {
    double frequency = 0.0;  // Hz
    std::function<double(double theta, double phi)> field;
};

/// Two-radiating-slot model of a rectangular patch: the slot pair separated
/// by L_eff along x (E-plane, phi = 0), each slot a uniform line source of
/// length W along y, with the obliquity factor of the slot axis. Evaluated
/// at the design frequency with the free-space wavenumber.
ElementModel patch_element_model(const PatchDesign& design);

/// Unit field over the upper hemisphere, zero below. Quadrature and
/// array-factor-only fixture.
ElementModel isotropic_element_model(double frequency);

/// Samples the two-slot model on a grid. Peak is at boresight and the
/// principal-plane cuts are mirror symmetric.
RadiationPattern patch_element_pattern(const PatchDesign& design,
                                       const SphericalGrid& grid);

/// U = 1 on the upper hemisphere, 0 below.
RadiationPattern isotropic_hemisphere_pattern(const SphericalGrid& grid,
                                              double frequency = 0.0);

/// U = 1 over the whole grid. Calibration fixture only: directivity of this
/// pattern on a full-sphere grid is exactly 1.
RadiationPattern isotropic_sphere_pattern(const SphericalGrid& grid,
                                          double frequency = 0.0);

} // namespace patchkit
