// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include "patchkit/substrate.hpp"

namespace patchkit {

/// Rectangular patch geometry synthesized for a target resonant frequency
/// by the transmission-line design procedure. Lengths in meters.
///
/// Invariants after synthesis: 1 <= eps_eff <= substrate.eps_r,
/// length = effective_length - 2 * length_extension > 0, and the corrected
/// resonance of the design recovers f0.
struct PatchDesign {
    double f0 = 0.0;        // target resonant frequency, Hz
    Substrate substrate;
    double width = 0.0;             // W
    double eps_eff = 1.0;           // effective dielectric constant
    double effective_length = 0.0;  // L_eff
    double length_extension = 0.0;  // delta L per radiating edge
    double length = 0.0;            // physical L
};

/// Step 1: W = c / (2 f0 sqrt((eps_r + 1)/2)). Strictly decreasing in both
/// f0 and eps_r.
double patch_width(double f0, const Substrate& substrate);

/// Step 2: quasi-TEM effective permittivity of the patch line,
/// (eps_r+1)/2 + (eps_r-1)/2 * (1 + 12 h/W)^(-1/2). Result in [1, eps_r].
double effective_permittivity(const Substrate& substrate, double width);

/// Step 3: half guided wavelength, L_eff = c / (2 f0 sqrt(eps_eff)).
double effective_length(double f0, double eps_eff);

/// Step 4: fringing-field length extension per edge,
/// 0.412 h (eps_eff + 0.3)(W/h + 0.264) / ((eps_eff - 0.258)(W/h + 0.8)).
double length_extension(const Substrate& substrate, double width, double eps_eff);

/// Steps 1-5 chained; physical length L = L_eff - 2 delta L.
PatchDesign synthesize_patch(double f0, const Substrate& substrate);

/// Corrected resonance c / (2 (L + 2 dL) sqrt(eps_eff)); exact inverse of
/// synthesize_patch.
double resonant_frequency(const PatchDesign& design);

/// Half-wave resonance 1 / (2 L sqrt(eps0 eps_r mu0)) using the physical
/// length and the substrate permittivity, with no fringing or effective-
/// permittivity correction. Kept alongside the corrected value so the
/// discrepancy between the two models stays visible.
double resonant_frequency_uncorrected(const PatchDesign& design);

/// Dimensionless bandwidth scaling factor
/// ((eps_r - 1)/eps_r^2) * (W/L) * (h/lambda0). Zero iff eps_r = 1; linear
/// in h. Only ratios between designs are meaningful.
double bandwidth_factor(const PatchDesign& design);

} // namespace patchkit
