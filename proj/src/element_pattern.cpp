// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/element_pattern.hpp"

#include "patchkit/constants.hpp"

#include <cmath>
#include <numbers>

namespace patchkit {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

double sinc(double x) {
    return std::abs(x) < 1e-9 ? 1.0 : std::sin(x) / x;
}

} // namespace

ElementModel patch_element_model(const PatchDesign& design) {
    const double k = 2.0 * std::numbers::pi * design.f0 / speed_of_light;
    const double a = 0.5 * k * design.effective_length;  // slot-pair half phase
    const double b = 0.5 * k * design.width;             // slot-length half phase
    ElementModel m;
    m.frequency = design.f0;
    m.field = [a, b](double theta, double phi) {
        if (theta > half_pi) return 0.0;
        const double st = std::sin(theta);
        const double sx = st * std::cos(phi);  // along the slot separation
        const double sy = st * std::sin(phi);  // along the slot length
        const double pair = std::cos(a * sx);
        const double slot = sinc(b * sy);
        const double obliquity = std::sqrt(std::max(0.0, 1.0 - sy * sy));
        return pair * slot * obliquity;
    };
    return m;
}

ElementModel isotropic_element_model(double frequency) {
    ElementModel m;
    m.frequency = frequency;
    m.field = [](double theta, double) { return theta > half_pi ? 0.0 : 1.0; };
    return m;
}

RadiationPattern patch_element_pattern(const PatchDesign& design,
                                       const SphericalGrid& grid) {
    grid.validate();
    const ElementModel model = patch_element_model(design);
    std::vector<double> u;
    u.reserve(grid.size());
    for (double theta : grid.theta)
        for (double phi : grid.phi) {
            const double f = model.field(theta, phi);
            u.push_back(f * f);
        }
    return RadiationPattern(grid, std::move(u), design.f0);
}

RadiationPattern isotropic_hemisphere_pattern(const SphericalGrid& grid,
                                              double frequency) {
    grid.validate();
    std::vector<double> u;
    u.reserve(grid.size());
    for (double theta : grid.theta)
        for (std::size_t j = 0; j < grid.phi.size(); ++j)
            u.push_back(theta > half_pi ? 0.0 : 1.0);
    return RadiationPattern(grid, std::move(u), frequency);
}

RadiationPattern isotropic_sphere_pattern(const SphericalGrid& grid,
                                          double frequency) {
    grid.validate();
    return RadiationPattern(grid, std::vector<double>(grid.size(), 1.0), frequency);
}

} // namespace patchkit
