// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/report.hpp"

#include "patchkit/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace patchkit {

namespace {

constexpr double rad_to_deg = 180.0 / std::numbers::pi;

template <typename F>
auto stage(const char* name, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string(name) + ": " + e.what());
    }
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void append_csv_row(std::string& out, double theta_deg, double phi_deg, double u) {
    out += fixed(theta_deg, 2);
    out += ',';
    out += fixed(phi_deg, 2);
    out += ',';
    out += u == 0.0 ? "-inf" : fixed(10.0 * std::log10(u), 2);
    out += '\n';
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace

DesignRun execute_design(const DesignSpecFile& spec) {
    const PatchDesign design =
        stage("synthesis", [&] { return synthesize_patch(spec.f0, spec.substrate); });

    const ArrayLayout layout = stage("array_geometry", [&] {
        return spec.surface == SurfaceKind::planar
                   ? planar_layout(spec.array_n, spec.spacing)
                   : cylindrical_layout(spec.array_n, spec.spacing, spec.cylinder_radius);
    });

    const Vec3 steer = direction_from_angles(spec.steer_theta, 0.0);
    const Excitation excitation = stage(
        "array_geometry", [&] { return cophase_excitation(layout, steer, spec.f0); });

    const SphericalGrid grid = SphericalGrid::upper_hemisphere();
    RadiationPattern pattern = stage("element_pattern", [&] {
        return total_pattern(layout, excitation, patch_element_model(design), grid,
                             spec.f0);
    });

    const PatternMetrics metrics = stage("metrics", [&] {
        return compute_pattern_metrics(pattern, spec.substrate.radiation_efficiency);
    });

    const FeedTree feed = stage("feed_network", [&] {
        return build_corporate_feed(spec.array_n, spec.element_impedance,
                                    spec.port_impedance, spec.substrate, spec.spacing,
                                    spec.f0);
    });

    FrequencyResponse sweep = stage("metrics", [&] {
        return resonator_sweep(design, spec.sweep_q, spec.sweep_r, spec.port_impedance,
                               spec.sweep_f_low, spec.sweep_f_high, spec.sweep_points);
    });

    return DesignRun{design,  layout, excitation, std::move(pattern),
                     metrics, feed,   std::move(sweep)};
}

nlohmann::ordered_json run_design(const DesignSpecFile& spec) {
    const DesignRun run = execute_design(spec);
    nlohmann::ordered_json report;

    report["design"] = {
        {"f0_ghz", run.design.f0 * 1e-9},
        {"eps_r", run.design.substrate.eps_r},
        {"h_mm", run.design.substrate.height * 1e3},
        {"width_mm", run.design.width * 1e3},
        {"eps_eff", run.design.eps_eff},
        {"effective_length_mm", run.design.effective_length * 1e3},
        {"length_extension_mm", run.design.length_extension * 1e3},
        {"length_mm", run.design.length * 1e3},
        {"resonant_frequency_ghz", resonant_frequency(run.design) * 1e-9},
        {"resonant_frequency_uncorrected_ghz",
         resonant_frequency_uncorrected(run.design) * 1e-9},
        {"bandwidth_factor", bandwidth_factor(run.design)},
    };

    nlohmann::ordered_json array = {
        {"n", run.layout.elements.size()},
        {"surface",
         run.layout.surface == SurfaceKind::planar ? "planar" : "cylindrical"},
        {"spacing_mm", run.layout.spacing * 1e3},
        {"steer_theta_deg", spec.steer_theta * rad_to_deg},
    };
    if (run.layout.surface == SurfaceKind::cylindrical)
        array["radius_mm"] = run.layout.cylinder_radius * 1e3;
    report["array"] = std::move(array);

    const auto paths = run.feed.path_electrical_lengths();
    const auto [min_it, max_it] = std::minmax_element(paths.begin(), paths.end());
    const double root_gamma = std::abs(feed_input_reflection(run.feed, spec.f0));
    report["feed"] = {
        {"port_ohms", run.feed.port_impedance},
        {"element_ohms", run.feed.element_impedance},
        {"leaves", run.feed.leaf_count()},
        {"path_electrical_length_rad", paths.front()},
        {"path_spread_rad", *max_it - *min_it},
        {"root_reflection_mag", root_gamma},
        {"root_return_loss_db", return_loss_db(root_gamma)},
        {"root_vswr", vswr_from_reflection(root_gamma)},
    };

    report["pattern"] = {
        {"directivity_dbi", run.metrics.directivity_dbi},
        {"gain_db", run.metrics.gain_db},
        {"efficiency", spec.substrate.radiation_efficiency},
        {"hpbw_e_plane_deg", optional_json(run.metrics.hpbw_e_plane_deg)},
        {"hpbw_h_plane_deg", optional_json(run.metrics.hpbw_h_plane_deg)},
        {"sidelobe_level_db", optional_json(run.metrics.sidelobe_level_db)},
        {"main_lobe_theta_deg", run.metrics.main_lobe_theta * rad_to_deg},
        {"main_lobe_phi_deg", run.metrics.main_lobe_phi * rad_to_deg},
    };

    double min_mag = 1.0;
    double f_min = run.sweep.frequencies.front();
    for (std::size_t i = 0; i < run.sweep.frequencies.size(); ++i) {
        const double m = std::abs(run.sweep.gamma[i]);
        if (m < min_mag) {
            min_mag = m;
            f_min = run.sweep.frequencies[i];
        }
    }
    const auto bw = bandwidth_minus_10db(run.sweep);
    report["sweep"] = {
        {"reference_ohms", run.sweep.reference_impedance},
        {"q_factor", spec.sweep_q},
        {"r_ohms", spec.sweep_r},
        {"points", run.sweep.frequencies.size()},
        {"f_low_ghz", run.sweep.frequencies.front() * 1e-9},
        {"f_high_ghz", run.sweep.frequencies.back() * 1e-9},
        {"min_vswr", vswr_from_reflection(min_mag)},
        {"min_vswr_frequency_ghz", f_min * 1e-9},
        {"min_s11_db", min_mag == 0.0 ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(20.0 * std::log10(min_mag))},
        {"bandwidth_minus_10db_mhz",
         bw ? nlohmann::ordered_json(*bw * 1e-6) : nlohmann::ordered_json(nullptr)},
    };

    return report;
}

std::string export_pattern_csv(const RadiationPattern& pattern,
                               std::optional<PrincipalCut> cut) {
    const auto& grid = pattern.grid();
    std::string out = "theta_deg,phi_deg,intensity_db\n";

    if (!cut) {
        for (std::size_t i = 0; i < grid.theta.size(); ++i)
            for (std::size_t j = 0; j < grid.phi.size(); ++j)
                append_csv_row(out, grid.theta[i] * rad_to_deg,
                               grid.phi[j] * rad_to_deg, pattern.at(i, j));
        return out;
    }

    const double phi0 = *cut == PrincipalCut::e_plane ? 0.0 : std::numbers::pi / 2.0;
    for (std::size_t i = 0; i < grid.theta.size(); ++i)
        for (std::size_t j = 0; j < grid.phi.size(); ++j) {
            const double p = grid.phi[j];
            if (std::abs(p - phi0) < 1e-9 ||
                std::abs(p - (phi0 + std::numbers::pi)) < 1e-9)
                append_csv_row(out, grid.theta[i] * rad_to_deg, p * rad_to_deg,
                               pattern.at(i, j));
        }
    return out;
}

std::string export_touchstone_s1p(const FrequencyResponse& response) {
    response.validate();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "# HZ S DB R %g\n", response.reference_impedance);
    std::string out = buf;
    for (std::size_t i = 0; i < response.frequencies.size(); ++i) {
        const double mag = std::max(std::abs(response.gamma[i]), 1e-15);
        const double db = 20.0 * std::log10(mag);
        const double phase =
            std::atan2(response.gamma[i].imag(), response.gamma[i].real()) * rad_to_deg;
        std::snprintf(buf, sizeof(buf), "%.10g %.4f %.4f\n", response.frequencies[i],
                      db, phase);
        out += buf;
    }
    return out;
}

std::string format_design_table(const PatchDesign& design) {
    std::string out;
    const auto row = [&out](const char* name, const std::string& value) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%-22s %s\n", name, value.c_str());
        out += buf;
    };
    row("f0", fixed(design.f0 * 1e-9, 4) + " GHz");
    row("eps_r", fixed(design.substrate.eps_r, 4));
    row("h", fixed(design.substrate.height * 1e3, 4) + " mm");
    row("W", fixed(design.width * 1e3, 4) + " mm");
    row("eps_eff", fixed(design.eps_eff, 4));
    row("L_eff", fixed(design.effective_length * 1e3, 4) + " mm");
    row("delta_L", fixed(design.length_extension * 1e3, 4) + " mm");
    row("L", fixed(design.length * 1e3, 4) + " mm");
    row("f_resonant", fixed(resonant_frequency(design) * 1e-9, 4) + " GHz");
    row("f_resonant_uncorr", fixed(resonant_frequency_uncorrected(design) * 1e-9, 4) + " GHz");
    row("bandwidth_factor", fixed(bandwidth_factor(design), 6));
    return out;
}

std::string format_feed_summary(const FeedTree& tree) {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "corporate feed: %zu leaves, port %.2f ohm, elements %.2f ohm\n",
                  tree.leaf_count(), tree.port_impedance, tree.element_impedance);
    out += buf;

    out += "sections (root to leaf):\n";
    const FeedNode* node = &tree.root;
    while (true) {
        for (const auto& seg : node->segments) {
            std::snprintf(buf, sizeof(buf),
                          "  z0 %7.3f ohm  width %7.4f mm  length %8.4f mm  elec %8.3f deg\n",
                          seg.z0, seg.width * 1e3, seg.physical_length * 1e3,
                          seg.electrical_length * rad_to_deg);
            out += buf;
        }
        if (node->is_leaf()) break;
        node = &node->children.front();
    }

    const auto paths = tree.path_electrical_lengths();
    const auto [min_it, max_it] = std::minmax_element(paths.begin(), paths.end());
    std::snprintf(buf, sizeof(buf), "path electrical length %0.6f rad, spread %.3g rad\n",
                  paths.front(), *max_it - *min_it);
    out += buf;

    const double g = std::abs(feed_input_reflection(tree, tree.design_frequency));
    std::snprintf(buf, sizeof(buf),
                  "root match at %.4f GHz: |Gamma| %.6f, return loss %.2f dB, VSWR %.4f\n",
                  tree.design_frequency * 1e-9, g, return_loss_db(g),
                  vswr_from_reflection(g));
    out += buf;
    return out;
}

} // namespace patchkit
