// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include "patchkit/radiation_pattern.hpp"
#include "patchkit/synthesis.hpp"

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace patchkit {

/// Principal-plane pattern cuts: the phi = 0 great circle (patch E-plane,
/// also the array plane) and the phi = pi/2 great circle (H-plane).
enum class PrincipalCut { e_plane, h_plane };

/// Peak-to-average intensity ratio 4 pi U_max / integral(U dOmega), by
/// trapezoidal quadrature in theta (sin(theta) Jacobian) with periodic
/// closure in phi. Directions outside the grid contribute nothing, so an
/// upper-hemisphere pattern integrates over the hemisphere only.
double directivity(const RadiationPattern& pattern);

/// gain = efficiency * directivity; efficiency in (0, 1].
double gain(const RadiationPattern& pattern, double efficiency);

/// Width in degrees between the two half-power crossings bracketing the
/// main lobe on the chosen cut, crossings linearly interpolated between
/// samples. nullopt when the pattern never drops to half power on the cut.
std::optional<double> half_power_beamwidth(const RadiationPattern& pattern,
                                           PrincipalCut cut);

/// Strongest local maximum outside the main lobe on the chosen cut, in dB
/// relative to the main lobe (always negative). nullopt when the cut is
/// monotone away from the peak (no sidelobe).
std::optional<double> sidelobe_level(const RadiationPattern& pattern,
                                     PrincipalCut cut);

/// Direction (theta, phi) of the strongest sample.
std::pair<double, double> main_lobe_direction(const RadiationPattern& pattern);

/// VSWR = (1 + |Gamma|)/(1 - |Gamma|) for |Gamma| in [0, 1).
double vswr_from_reflection(double gamma_mag);

/// |Gamma| = (VSWR - 1)/(VSWR + 1); exact inverse of vswr_from_reflection.
double reflection_from_vswr(double vswr);

/// Positive return loss -20 log10 |Gamma|. |Gamma| = 0 yields +infinity.
double return_loss_db(double gamma_mag);

/// Sampled complex reflection coefficient versus frequency.
struct FrequencyResponse {
    std::vector<double> frequencies;           // Hz, strictly increasing
    std::vector<std::complex<double>> gamma;   // |gamma| <= 1
    double reference_impedance = 50.0;         // ohm

    void validate() const;
};

/// Reflection sweep of a parallel-resonator input model
/// Z(f) = R / (1 + jQ (f/f_r - f_r/f)) referenced to `reference`, sampled
/// uniformly over [f_low, f_high] with the design's corrected resonance as
/// f_r. Passive everywhere; |Gamma| is smallest at the sample nearest f_r.
FrequencyResponse resonator_sweep(const PatchDesign& design, double quality_factor,
                                  double resonance_resistance, double reference,
                                  double f_low, double f_high, std::size_t points);

/// f_upper - f_lower of the -10 dB return-loss band containing the global
/// |Gamma| minimum, crossings linearly interpolated. nullopt when the trace
/// never dips below -10 dB.
std::optional<double> bandwidth_minus_10db(const FrequencyResponse& response);

/// Figure-of-merit bundle for a pattern.
struct PatternMetrics {
    double directivity = 0.0;        // linear
    double directivity_dbi = 0.0;
    double gain = 0.0;               // linear
    double gain_db = 0.0;
    std::optional<double> hpbw_e_plane_deg;
    std::optional<double> hpbw_h_plane_deg;
    std::optional<double> sidelobe_level_db;  // worst of the two cuts
    double main_lobe_theta = 0.0;    // rad
    double main_lobe_phi = 0.0;      // rad
};

PatternMetrics compute_pattern_metrics(const RadiationPattern& pattern,
                                       double efficiency);

} // namespace patchkit
