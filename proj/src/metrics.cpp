// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/metrics.hpp"

#include "patchkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace patchkit {

namespace {

constexpr double pi = std::numbers::pi;

/// Great-circle cut through boresight: negative angles from the phi + pi
/// half of the grid, positive from the phi half. Angles in radians.
struct Cut {
    std::vector<double> angle;
    std::vector<double> value;
};

std::size_t phi_index(const SphericalGrid& grid, double phi) {
    for (std::size_t j = 0; j < grid.phi.size(); ++j)
        if (std::abs(grid.phi[j] - phi) < 1e-9) return j;
    throw std::domain_error("pattern grid has no phi = " + std::to_string(phi) +
                            " rad samples for the requested cut");
}

Cut extract_cut(const RadiationPattern& pattern, PrincipalCut cut) {
    const auto& grid = pattern.grid();
    const double phi0 = cut == PrincipalCut::e_plane ? 0.0 : pi / 2.0;
    const std::size_t j_pos = phi_index(grid, phi0);
    const std::size_t j_neg = phi_index(grid, phi0 + pi);

    Cut out;
    const std::size_t n = grid.theta.size();
    out.angle.reserve(2 * n - 1);
    out.value.reserve(2 * n - 1);
    for (std::size_t i = n; i-- > 1;) {
        out.angle.push_back(-grid.theta[i]);
        out.value.push_back(pattern.at(i, j_neg));
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.angle.push_back(grid.theta[i]);
        out.value.push_back(pattern.at(i, j_pos));
    }
    return out;
}

/// Main lobe extent around the peak: walk outward while the cut keeps
/// descending; the first rise marks the lobe boundary.
std::pair<std::size_t, std::size_t> main_lobe_bounds(const std::vector<double>& v,
                                                     std::size_t peak) {
    std::size_t lo = peak;
    while (lo > 0 && v[lo - 1] <= v[lo]) --lo;
    std::size_t hi = peak;
    while (hi + 1 < v.size() && v[hi + 1] <= v[hi]) ++hi;
    return {lo, hi};
}

} // namespace

double directivity(const RadiationPattern& pattern) {
    const auto& grid = pattern.grid();
    const std::size_t nt = grid.theta.size();
    const std::size_t np = grid.phi.size();
    if (nt < 2)
        throw std::domain_error("directivity needs at least two theta samples");

    // integrate U sin(theta) dtheta per azimuth, then close phi periodically
    std::vector<double> ring(np, 0.0);
    for (std::size_t j = 0; j < np; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < nt; ++i) {
            const double f0 = pattern.at(i, j) * std::sin(grid.theta[i]);
            const double f1 = pattern.at(i + 1, j) * std::sin(grid.theta[i + 1]);
            acc += 0.5 * (f0 + f1) * (grid.theta[i + 1] - grid.theta[i]);
        }
        ring[j] = acc;
    }
    double integral = 0.0;
    for (std::size_t j = 0; j + 1 < np; ++j)
        integral += 0.5 * (ring[j] + ring[j + 1]) * (grid.phi[j + 1] - grid.phi[j]);
    integral += 0.5 * (ring[np - 1] + ring[0]) *
                (2.0 * pi - (grid.phi[np - 1] - grid.phi[0]));

    if (!(integral > 0.0))
        throw std::domain_error("pattern radiates no power over the grid");
    const double u_max = *std::max_element(pattern.intensity().begin(),
                                           pattern.intensity().end());
    return 4.0 * pi * u_max / integral;
}

double gain(const RadiationPattern& pattern, double efficiency) {
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw std::domain_error("efficiency must be in (0, 1]");
    return efficiency * directivity(pattern);
}

std::optional<double> half_power_beamwidth(const RadiationPattern& pattern,
                                           PrincipalCut cut) {
    const Cut c = extract_cut(pattern, cut);
    const std::size_t peak =
        std::max_element(c.value.begin(), c.value.end()) - c.value.begin();
    const double half = 0.5 * c.value[peak];

    const auto cross = [&](std::size_t from, bool rightward) -> std::optional<double> {
        std::size_t k = from;
        while (true) {
            const std::size_t next = rightward ? k + 1 : k - 1;
            if (rightward ? next >= c.value.size() : k == 0) return std::nullopt;
            if (c.value[next] < half) {
                const double t = (c.value[k] - half) / (c.value[k] - c.value[next]);
                return c.angle[k] + t * (c.angle[next] - c.angle[k]);
            }
            k = next;
        }
    };

    const auto right = cross(peak, true);
    const auto left = cross(peak, false);
    if (!right || !left) return std::nullopt;
    return (*right - *left) * 180.0 / pi;
}

std::optional<double> sidelobe_level(const RadiationPattern& pattern,
                                     PrincipalCut cut) {
    const Cut c = extract_cut(pattern, cut);
    const auto& v = c.value;
    const std::size_t peak = std::max_element(v.begin(), v.end()) - v.begin();
    const auto [lo, hi] = main_lobe_bounds(v, peak);

    double best = 0.0;
    const auto is_local_max = [&](std::size_t k) {
        const bool left_ok = k == 0 || v[k] >= v[k - 1];
        const bool right_ok = k + 1 == v.size() || v[k] >= v[k + 1];
        return left_ok && right_ok;
    };
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k >= lo && k <= hi) continue;
        if (v[k] > best && is_local_max(k)) best = v[k];
    }
    if (best <= 0.0) return std::nullopt;
    return 10.0 * std::log10(best / v[peak]);
}

std::pair<double, double> main_lobe_direction(const RadiationPattern& pattern) {
    const auto& grid = pattern.grid();
    const auto it = std::max_element(pattern.intensity().begin(),
                                     pattern.intensity().end());
    const std::size_t idx = it - pattern.intensity().begin();
    return {grid.theta[idx / grid.phi.size()], grid.phi[idx % grid.phi.size()]};
}

double vswr_from_reflection(double gamma_mag) {
    if (!(gamma_mag >= 0.0 && gamma_mag < 1.0))
        throw std::domain_error("|Gamma| must be in [0, 1) for a finite VSWR");
    return (1.0 + gamma_mag) / (1.0 - gamma_mag);
}

double reflection_from_vswr(double vswr) {
    if (!(vswr >= 1.0)) throw std::domain_error("VSWR must be >= 1");
    return (vswr - 1.0) / (vswr + 1.0);
}

double return_loss_db(double gamma_mag) {
    if (!(gamma_mag >= 0.0 && gamma_mag <= 1.0))
        throw std::domain_error("|Gamma| must be in [0, 1]");
    if (gamma_mag == 0.0) return std::numeric_limits<double>::infinity();
    return -20.0 * std::log10(gamma_mag);
}

void FrequencyResponse::validate() const {
    if (frequencies.size() != gamma.size() || frequencies.empty())
        throw std::domain_error("frequency response samples are inconsistent");
    check_positive(reference_impedance, "reference_impedance");
    for (std::size_t i = 1; i < frequencies.size(); ++i)
        if (!(frequencies[i] > frequencies[i - 1]))
            throw std::domain_error("frequencies must be strictly increasing");
    for (const auto& g : gamma)
        if (std::abs(g) > 1.0 + 1e-12)
            throw std::domain_error("reflection trace is not passive");
}

FrequencyResponse resonator_sweep(const PatchDesign& design, double quality_factor,
                                  double resonance_resistance, double reference,
                                  double f_low, double f_high, std::size_t points) {
    check_positive(quality_factor, "quality_factor");
    check_positive(resonance_resistance, "resonance_resistance");
    check_positive(reference, "reference");
    check_positive(f_low, "f_low");
    if (points < 3) throw std::domain_error("sweep needs at least 3 points");
    const double fr = resonant_frequency(design);
    if (!(f_low < fr && fr < f_high))
        throw std::domain_error("sweep band must contain the resonant frequency " +
                                std::to_string(fr * 1e-9) + " GHz");

    FrequencyResponse resp;
    resp.reference_impedance = reference;
    resp.frequencies.reserve(points);
    resp.gamma.reserve(points);
    const std::complex<double> j{0.0, 1.0};
    for (std::size_t i = 0; i < points; ++i) {
        const double f = f_low + (f_high - f_low) * static_cast<double>(i) /
                                     static_cast<double>(points - 1);
        const std::complex<double> z =
            resonance_resistance / (1.0 + j * quality_factor * (f / fr - fr / f));
        resp.frequencies.push_back(f);
        resp.gamma.push_back((z - reference) / (z + reference));
    }
    return resp;
}

std::optional<double> bandwidth_minus_10db(const FrequencyResponse& response) {
    response.validate();
    const double threshold = std::pow(10.0, -10.0 / 20.0);
    std::vector<double> mag(response.gamma.size());
    std::transform(response.gamma.begin(), response.gamma.end(), mag.begin(),
                   [](const std::complex<double>& g) { return std::abs(g); });

    const std::size_t dip = std::min_element(mag.begin(), mag.end()) - mag.begin();
    if (!(mag[dip] < threshold)) return std::nullopt;

    const auto& f = response.frequencies;
    // crossings interpolated on |Gamma|; the band clamps to the sweep edges
    // when a side never rises back above -10 dB
    double f_lower = f.front();
    for (std::size_t i = dip; i-- > 0;)
        if (mag[i] >= threshold) {
            f_lower = f[i] + (f[i + 1] - f[i]) * (mag[i] - threshold) /
                                 (mag[i] - mag[i + 1]);
            break;
        }
    double f_upper = f.back();
    for (std::size_t i = dip + 1; i < mag.size(); ++i)
        if (mag[i] >= threshold) {
            f_upper = f[i - 1] + (f[i] - f[i - 1]) * (threshold - mag[i - 1]) /
                                     (mag[i] - mag[i - 1]);
            break;
        }
    return f_upper - f_lower;
}

PatternMetrics compute_pattern_metrics(const RadiationPattern& pattern,
                                       double efficiency) {
    PatternMetrics m;
    m.directivity = directivity(pattern);
    m.directivity_dbi = 10.0 * std::log10(m.directivity);
    m.gain = gain(pattern, efficiency);
    m.gain_db = 10.0 * std::log10(m.gain);
    m.hpbw_e_plane_deg = half_power_beamwidth(pattern, PrincipalCut::e_plane);
    m.hpbw_h_plane_deg = half_power_beamwidth(pattern, PrincipalCut::h_plane);
    const auto sll_e = sidelobe_level(pattern, PrincipalCut::e_plane);
    const auto sll_h = sidelobe_level(pattern, PrincipalCut::h_plane);
    if (sll_e && sll_h)
        m.sidelobe_level_db = std::max(*sll_e, *sll_h);
    else
        m.sidelobe_level_db = sll_e ? sll_e : sll_h;
    std::tie(m.main_lobe_theta, m.main_lobe_phi) = main_lobe_direction(pattern);
    return m;
}

} // namespace patchkit
