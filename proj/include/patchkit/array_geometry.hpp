// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include "patchkit/element_pattern.hpp"
#include "patchkit/vec3.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace patchkit {

/// One element: phase center plus boresight direction.
struct ElementPlacement {
    Vec3 position;  // m
    Vec3 normal;    // unit vector
};

enum class SurfaceKind { planar, cylindrical };

/// Linear array on a flat line or a cylindrical arc. The element line runs
/// along x. For the cylindrical surface the cylinder axis is y, the apex
/// element sits at the origin and the cylinder center at (0, 0, -radius),
/// so the arc bends the array away from boresight and the normals fan out
/// radially in the x-z plane.
struct ArrayLayout {
    std::vector<ElementPlacement> elements;
    SurfaceKind surface = SurfaceKind::planar;
    double cylinder_radius = 0.0;  // m, cylindrical only
    double spacing = 0.0;          // m; straight-line (planar) or arc length

    void validate() const;
};

/// Per-element drive. Amplitudes nonnegative with at least one positive.
struct Excitation {
    std::vector<double> amplitudes;
    std::vector<double> phases;  // rad
};

/// n elements along x at the given spacing, centered on the origin, all
/// normals +z.
ArrayLayout planar_layout(std::size_t n, double spacing);

/// n elements on the cylinder at arc angles (i - (n-1)/2) * arc_spacing /
/// radius, radial normals. Converges to planar_layout as radius grows.
ArrayLayout cylindrical_layout(std::size_t n, double arc_spacing, double radius);

/// Uniform amplitudes with phase_i = -k * (position_i . steer_direction),
/// aligning every element contribution toward steer_direction.
Excitation cophase_excitation(const ArrayLayout& layout, const Vec3& steer_direction,
                              double frequency);

/// Complex array factor sum_i A_i exp(j(phase_i + k position_i . direction)).
std::complex<double> array_factor(const ArrayLayout& layout, const Excitation& excitation,
                                  const Vec3& direction, double frequency);

/// Element pattern and array factor composed over a grid. Planar layouts use
/// pattern multiplication (element intensity times |AF|^2); cylindrical
/// layouts sum each element's field in its own rotated frame coherently,
/// since the element boresights differ. Result is renormalized to peak 1.
RadiationPattern total_pattern(const ArrayLayout& layout, const Excitation& excitation,
                               const ElementModel& element, const SphericalGrid& grid,
                               double frequency);

} // namespace patchkit
