// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/synthesis.hpp"

#include "patchkit/constants.hpp"

#include <cmath>

namespace patchkit {

double patch_width(double f0, const Substrate& substrate) {
    check_positive(f0, "f0");
    substrate.validate();
    return speed_of_light / (2.0 * f0 * std::sqrt((substrate.eps_r + 1.0) / 2.0));
}

double effective_permittivity(const Substrate& substrate, double width) {
    substrate.validate();
    check_positive(width, "width");
    const double er = substrate.eps_r;
    return (er + 1.0) / 2.0 +
           (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 * substrate.height / width);
}

double effective_length(double f0, double eps_eff) {
    check_positive(f0, "f0");
    if (!(eps_eff >= 1.0))
        throw std::domain_error("eps_eff must be >= 1 (got " + std::to_string(eps_eff) + ")");
    return speed_of_light / (2.0 * f0 * std::sqrt(eps_eff));
}

double length_extension(const Substrate& substrate, double width, double eps_eff) {
    substrate.validate();
    check_positive(width, "width");
    if (!(eps_eff > 0.258))
        throw std::domain_error("eps_eff must exceed 0.258 (formula pole)");
    const double h = substrate.height;
    const double w_h = width / h;
    return 0.412 * h * (eps_eff + 0.3) * (w_h + 0.264) /
           ((eps_eff - 0.258) * (w_h + 0.8));
}

PatchDesign synthesize_patch(double f0, const Substrate& substrate) {
    PatchDesign d;
    d.f0 = f0;
    d.substrate = substrate;
    d.width = patch_width(f0, substrate);
    d.eps_eff = effective_permittivity(substrate, d.width);
    d.effective_length = effective_length(f0, d.eps_eff);
    d.length_extension = length_extension(substrate, d.width, d.eps_eff);
    d.length = d.effective_length - 2.0 * d.length_extension;
    if (!(d.length > 0.0))
        throw std::domain_error(
            "fringing extension exceeds the half guided wavelength; substrate "
            "is electrically too thick for this frequency");
    return d;
}

double resonant_frequency(const PatchDesign& design) {
    return speed_of_light /
           (2.0 * (design.length + 2.0 * design.length_extension) *
            std::sqrt(design.eps_eff));
}

double resonant_frequency_uncorrected(const PatchDesign& design) {
    const auto& k = physical_constants;
    return 1.0 / (2.0 * design.length *
                  std::sqrt(k.eps0 * design.substrate.eps_r * k.mu0));
}

double bandwidth_factor(const PatchDesign& design) {
    const double er = design.substrate.eps_r;
    const double lambda0 = speed_of_light / design.f0;
    return ((er - 1.0) / (er * er)) * (design.width / design.length) *
           (design.substrate.height / lambda0);
}

} // namespace patchkit
