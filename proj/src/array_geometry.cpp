// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/array_geometry.hpp"

#include "patchkit/constants.hpp"
#include "patchkit/errors.hpp"

#include <cmath>
#include <numbers>

namespace patchkit {

namespace {

double wavenumber(double frequency) {
    check_positive(frequency, "frequency");
    return 2.0 * std::numbers::pi * frequency / speed_of_light;
}

void check_consistent(const ArrayLayout& layout, const Excitation& excitation) {
    layout.validate();
    if (excitation.amplitudes.size() != layout.elements.size() ||
        excitation.phases.size() != layout.elements.size())
        throw std::domain_error("excitation length does not match element count");
    bool any = false;
    for (double a : excitation.amplitudes) {
        if (!(a >= 0.0)) throw std::domain_error("excitation amplitudes must be >= 0");
        any = any || a > 0.0;
    }
    if (!any) throw std::domain_error("excitation must drive at least one element");
}

} // namespace

void ArrayLayout::validate() const {
    if (elements.empty())
        throw std::domain_error("array layout needs at least one element");
    check_positive(spacing, "spacing");
    if (surface == SurfaceKind::cylindrical)
        check_positive(cylinder_radius, "cylinder_radius");
    for (const auto& e : elements)
        if (std::abs(e.normal.norm() - 1.0) > 1e-12)
            throw std::domain_error("element normals must be unit length");
}

ArrayLayout planar_layout(std::size_t n, double spacing) {
    if (n == 0) throw std::domain_error("element count must be >= 1");
    check_positive(spacing, "spacing");
    ArrayLayout layout;
    layout.surface = SurfaceKind::planar;
    layout.spacing = spacing;
    layout.elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = (static_cast<double>(i) - (static_cast<double>(n) - 1.0) / 2.0) * spacing;
        layout.elements.push_back({{x, 0.0, 0.0}, {0.0, 0.0, 1.0}});
    }
    return layout;
}

ArrayLayout cylindrical_layout(std::size_t n, double arc_spacing, double radius) {
    if (n == 0) throw std::domain_error("element count must be >= 1");
    check_positive(arc_spacing, "arc_spacing");
    check_positive(radius, "radius");
    if (static_cast<double>(n) * arc_spacing >= 2.0 * std::numbers::pi * radius)
        throw std::domain_error("total arc exceeds the cylinder circumference");
    ArrayLayout layout;
    layout.surface = SurfaceKind::cylindrical;
    layout.cylinder_radius = radius;
    layout.spacing = arc_spacing;
    layout.elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha =
            (static_cast<double>(i) - (static_cast<double>(n) - 1.0) / 2.0) * arc_spacing / radius;
        const double s = std::sin(alpha);
        const double c = std::cos(alpha);
        // apex at the origin, cylinder center at (0, 0, -radius)
        layout.elements.push_back({{radius * s, 0.0, radius * (c - 1.0)}, {s, 0.0, c}});
    }
    return layout;
}

Excitation cophase_excitation(const ArrayLayout& layout, const Vec3& steer_direction,
                              double frequency) {
    layout.validate();
    if (std::abs(steer_direction.norm() - 1.0) > 1e-9)
        throw std::domain_error("steer_direction must be a unit vector");
    const double k = wavenumber(frequency);
    Excitation ex;
    ex.amplitudes.assign(layout.elements.size(), 1.0);
    ex.phases.reserve(layout.elements.size());
    for (const auto& e : layout.elements)
        ex.phases.push_back(-k * e.position.dot(steer_direction));
    return ex;
}

std::complex<double> array_factor(const ArrayLayout& layout, const Excitation& excitation,
                                  const Vec3& direction, double frequency) {
    check_consistent(layout, excitation);
    if (std::abs(direction.norm() - 1.0) > 1e-9)
        throw std::domain_error("direction must be a unit vector");
    const double k = wavenumber(frequency);
    std::complex<double> af = 0.0;
    for (std::size_t i = 0; i < layout.elements.size(); ++i) {
        const double phase = excitation.phases[i] + k * layout.elements[i].position.dot(direction);
        af += excitation.amplitudes[i] * std::polar(1.0, phase);
    }
    return af;
}

RadiationPattern total_pattern(const ArrayLayout& layout, const Excitation& excitation,
                               const ElementModel& element, const SphericalGrid& grid,
                               double frequency) {
    check_consistent(layout, excitation);
    grid.validate();
    if (!element.field)
        throw std::domain_error("element model has no field function");
    if (element.frequency > 0.0 &&
        std::abs(element.frequency - frequency) > 1e-9 * frequency)
        throw std::domain_error("element model frequency does not match the array frequency");
    const double k = wavenumber(frequency);

    std::vector<double> u;
    u.reserve(grid.size());

    const auto af_magnitude = [&](const Vec3& d) {
        std::complex<double> af = 0.0;
        for (std::size_t i = 0; i < layout.elements.size(); ++i) {
            const double phase =
                excitation.phases[i] + k * layout.elements[i].position.dot(d);
            af += excitation.amplitudes[i] * std::polar(1.0, phase);
        }
        return std::abs(af);
    };

    if (layout.surface == SurfaceKind::planar) {
        for (double theta : grid.theta)
            for (double phi : grid.phi) {
                const double f = element.field(theta, phi);
                const double afm = af_magnitude(direction_from_angles(theta, phi));
                u.push_back(f * f * afm * afm);
            }
        return RadiationPattern(grid, std::move(u), frequency);
    }

    // Cylindrical: each element's field in its rotated frame (local x is the
    // arc tangent, local y the cylinder axis, local z its normal), summed
    // coherently with the phase-center term.
    for (double theta : grid.theta)
        for (double phi : grid.phi) {
            const Vec3 d = direction_from_angles(theta, phi);
            std::complex<double> field_sum = 0.0;
            for (std::size_t i = 0; i < layout.elements.size(); ++i) {
                const auto& e = layout.elements[i];
                const Vec3 local_x{e.normal.z, 0.0, -e.normal.x};
                const double dz = d.dot(e.normal);
                const double theta_loc = std::acos(std::clamp(dz, -1.0, 1.0));
                const double phi_loc = std::atan2(d.y, d.dot(local_x));
                const double f = element.field(theta_loc, phi_loc);
                const double phase = excitation.phases[i] + k * e.position.dot(d);
                field_sum += excitation.amplitudes[i] * f * std::polar(1.0, phase);
            }
            u.push_back(std::norm(field_sum));
        }
    return RadiationPattern(grid, std::move(u), frequency);
}

} // namespace patchkit
