// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/radiation_pattern.hpp"

#include "patchkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace patchkit {

namespace {

std::vector<double> degree_range(double last_deg, double step_deg) {
    std::vector<double> out;
    const auto n = static_cast<std::size_t>(std::llround(last_deg / step_deg));
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        out.push_back(i * step_deg * std::numbers::pi / 180.0);
    return out;
}

} // namespace

SphericalGrid SphericalGrid::upper_hemisphere(double step_deg) {
    SphericalGrid g;
    g.theta = degree_range(90.0, step_deg);
    g.phi = degree_range(360.0 - step_deg, step_deg);
    g.validate();
    return g;
}

SphericalGrid SphericalGrid::full_sphere(double step_deg) {
    SphericalGrid g;
    g.theta = degree_range(180.0, step_deg);
    g.phi = degree_range(360.0 - step_deg, step_deg);
    g.validate();
    return g;
}

void SphericalGrid::validate() const {
    if (theta.empty() || phi.empty())
        throw std::domain_error("spherical grid must have theta and phi samples");
    if (theta.front() != 0.0)
        throw std::domain_error("spherical grid theta must include 0 (boresight)");
    constexpr double pi = std::numbers::pi;
    for (std::size_t i = 1; i < theta.size(); ++i)
        if (!(theta[i] > theta[i - 1]))
            throw std::domain_error("spherical grid theta must be strictly increasing");
    if (theta.back() > pi + 1e-12)
        throw std::domain_error("spherical grid theta must lie in [0, pi]");
    if (phi.front() < 0.0 || phi.back() >= 2.0 * pi)
        throw std::domain_error("spherical grid phi must lie in [0, 2pi)");
    for (std::size_t i = 1; i < phi.size(); ++i)
        if (!(phi[i] > phi[i - 1]))
            throw std::domain_error("spherical grid phi must be strictly increasing");
}

RadiationPattern::RadiationPattern(SphericalGrid grid, std::vector<double> intensity,
                                   double frequency)
    : grid_(std::move(grid)), intensity_(std::move(intensity)), frequency_(frequency) {
    grid_.validate();
    if (intensity_.size() != grid_.size())
        throw std::domain_error("pattern sample count does not match grid size");
    double max = 0.0;
    for (double u : intensity_) {
        if (!(u >= 0.0) || !std::isfinite(u))
            throw std::domain_error("pattern intensity must be finite and nonnegative");
        max = std::max(max, u);
    }
    if (max == 0.0)
        throw std::domain_error("pattern is identically zero");
    if (max != 1.0)
        for (double& u : intensity_) u /= max;
}

} // namespace patchkit
