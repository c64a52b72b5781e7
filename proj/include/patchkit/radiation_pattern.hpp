// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace patchkit {

/// Tensor-product sampling of the sphere. theta is the polar angle from
/// boresight (+z), strictly increasing starting at 0; phi is the azimuth in
/// [0, 2pi), strictly increasing. Antenna patterns use upper-hemisphere
/// grids (theta up to pi/2); full-sphere grids exist for quadrature
/// calibration fixtures.
struct SphericalGrid {
    std::vector<double> theta;  // rad
    std::vector<double> phi;    // rad

    static SphericalGrid upper_hemisphere(double step_deg = 1.0);
    static SphericalGrid full_sphere(double step_deg = 1.0);

    std::size_t size() const { return theta.size() * phi.size(); }
    void validate() const;
};

/// Normalized radiation intensity U(theta, phi) sampled on a grid.
/// Construction rescales so the grid maximum is exactly 1; all samples are
/// nonnegative. Directions below the ground plane carry zero intensity.
class RadiationPattern {
public:
    /// `intensity` is theta-major: sample (i, j) at index i * phi.size() + j.
    /// Throws std::domain_error on negative samples or an all-zero pattern.
    RadiationPattern(SphericalGrid grid, std::vector<double> intensity,
                     double frequency);

    const SphericalGrid& grid() const { return grid_; }
    double frequency() const { return frequency_; }
    std::span<const double> intensity() const { return intensity_; }

    double at(std::size_t i_theta, std::size_t i_phi) const {
        return intensity_[i_theta * grid_.phi.size() + i_phi];
    }

private:
    SphericalGrid grid_;
    std::vector<double> intensity_;
    double frequency_;
};

} // namespace patchkit
