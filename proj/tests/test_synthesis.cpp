// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/constants.hpp"
#include "patchkit/synthesis.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace patchkit;

namespace {

const Substrate kBoard{2.94, 0.762e-3, 0.0345e-3, 0.8};

// Worked 9 GHz example, frozen from an independent numeric evaluation of
// the five design steps with c = 299792458 m/s.
constexpr double kW = 0.01186629346729128;
constexpr double kEpsEff = 2.698975978222469;
constexpr double kLeff = 0.010137915994466617;
constexpr double kDeltaL = 0.3730834052466264e-3;
constexpr double kL = 0.009391749183973364;
constexpr double kFRaw = 9.308303952679823e9;
constexpr double kBwFactor = 0.006487127681307537;

} // namespace

TEST_SUITE_BEGIN("synthesis");

TEST_CASE("physical constants are mutually consistent") {
    const auto& k = physical_constants;
    CHECK(std::abs(k.c - 1.0 / std::sqrt(k.eps0 * k.mu0)) / k.c < 1e-6);
    CHECK(k.c == speed_of_light);
}

TEST_CASE("patch width matches the worked example") {
    CHECK(patch_width(9e9, kBoard) == doctest::Approx(kW).epsilon(1e-12));
}

TEST_CASE("patch width collapses to a half wavelength in air") {
    Substrate air{1.0, 0.762e-3, 0.0, 1.0};
    CHECK(patch_width(9e9, air) ==
          doctest::Approx(speed_of_light / (2.0 * 9e9)).epsilon(1e-15));
}

TEST_CASE("patch width halves when the frequency doubles") {
    CHECK(patch_width(18e9, kBoard) ==
          doctest::Approx(patch_width(9e9, kBoard) / 2.0).epsilon(1e-15));
    CHECK(patch_width(2e9, kBoard) ==
          doctest::Approx(patch_width(1e9, kBoard) / 2.0).epsilon(1e-15));
}

TEST_CASE("patch width rejects a non-positive frequency") {
    CHECK_THROWS_AS(patch_width(0.0, kBoard), std::domain_error);
    CHECK_THROWS_AS(patch_width(-1e9, kBoard), std::domain_error);
}

TEST_CASE("effective permittivity matches the worked example") {
    CHECK(effective_permittivity(kBoard, kW) ==
          doctest::Approx(kEpsEff).epsilon(1e-12));
}

TEST_CASE("effective permittivity is exactly 1 in air") {
    Substrate air{1.0, 1e-3, 0.0, 1.0};
    CHECK(effective_permittivity(air, 0.01) == 1.0);
    CHECK(effective_permittivity(air, 1e-5) == 1.0);
}

TEST_CASE("effective permittivity approaches eps_r for a vanishing height") {
    Substrate thin{4.7, 1e-12, 0.0, 1.0};
    CHECK(effective_permittivity(thin, 0.01) == doctest::Approx(4.7).epsilon(1e-6));
}

TEST_CASE("effective permittivity is monotone in width and bounded") {
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> er_dist(1.0, 12.0);
    std::uniform_real_distribution<double> ratio_dist(1e-4, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double w = 0.01;
        Substrate s{er_dist(rng), ratio_dist(rng) * w, 0.0, 1.0};
        const double e1 = effective_permittivity(s, w);
        const double e2 = effective_permittivity(s, w * 1.5);
        CHECK(e1 >= 1.0);
        CHECK(e1 <= s.eps_r);
        CHECK(e2 >= e1);
    }
}

TEST_CASE("effective permittivity rejects a non-positive width") {
    CHECK_THROWS_AS(effective_permittivity(kBoard, 0.0), std::domain_error);
}

TEST_CASE("effective length matches the worked example") {
    CHECK(effective_length(9e9, kEpsEff) == doctest::Approx(kLeff).epsilon(1e-12));
}

TEST_CASE("effective length scales as the inverse root of eps_eff") {
    CHECK(effective_length(9e9, 1.0) ==
          doctest::Approx(speed_of_light / (2.0 * 9e9)).epsilon(1e-15));
    CHECK(effective_length(9e9, 4.0) ==
          doctest::Approx(effective_length(9e9, 1.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("effective length rejects invalid inputs") {
    CHECK_THROWS_AS(effective_length(0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(effective_length(9e9, 0.5), std::domain_error);
}

TEST_CASE("length extension matches the worked example") {
    CHECK(length_extension(kBoard, kW, kEpsEff) ==
          doctest::Approx(kDeltaL).epsilon(1e-12));
}

TEST_CASE("length extension is homogeneous in the height at fixed W/h") {
    const double dl = length_extension(kBoard, kW, kEpsEff);
    Substrate doubled = kBoard;
    doubled.height *= 2.0;
    CHECK(length_extension(doubled, 2.0 * kW, kEpsEff) ==
          doctest::Approx(2.0 * dl).epsilon(1e-12));

    Substrate thin = kBoard;
    thin.height = 1e-9;
    CHECK(length_extension(thin, kW * thin.height / kBoard.height, kEpsEff) <
          1e-11);
}

TEST_CASE("length extension rejects the formula pole") {
    CHECK_THROWS_AS(length_extension(kBoard, kW, 0.25), std::domain_error);
}

TEST_CASE("synthesize_patch chains the five steps") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    CHECK(d.width == doctest::Approx(kW).epsilon(1e-12));
    CHECK(d.eps_eff == doctest::Approx(kEpsEff).epsilon(1e-12));
    CHECK(d.effective_length == doctest::Approx(kLeff).epsilon(1e-12));
    CHECK(d.length_extension == doctest::Approx(kDeltaL).epsilon(1e-12));
    CHECK(d.length == doctest::Approx(kL).epsilon(1e-12));
    CHECK(d.length == doctest::Approx(d.effective_length - 2.0 * d.length_extension));
    CHECK(d.eps_eff >= 1.0);
    CHECK(d.eps_eff <= d.substrate.eps_r);
    CHECK(d.length > 0.0);
    CHECK(d.length < d.effective_length);
    CHECK(d.length_extension > 0.0);
}

TEST_CASE("synthesis and resonance are mutual inverses") {
    for (double f0 : {1e9, 9e9, 30e9}) {
        const PatchDesign d = synthesize_patch(f0, kBoard);
        CHECK(resonant_frequency(d) == doctest::Approx(f0).epsilon(1e-12));
    }
}

TEST_CASE("round trip holds across the whole input domain") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> f_dist(1e9, 30e9);
    std::uniform_real_distribution<double> er_dist(1.5, 12.0);
    std::uniform_real_distribution<double> h_dist(0.1e-3, 3e-3);
    for (int i = 0; i < 1000; ++i) {
        const double f0 = f_dist(rng);
        Substrate s{er_dist(rng), h_dist(rng), 0.0, 1.0};
        const PatchDesign d = synthesize_patch(f0, s);
        CHECK(std::abs(resonant_frequency(d) - f0) / f0 < 1e-4);
        CHECK(d.length > 0.0);
        CHECK(d.length_extension > 0.0);
        CHECK(d.length < d.effective_length);
    }
}

TEST_CASE("uncorrected resonance shows the model discrepancy") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    CHECK(resonant_frequency_uncorrected(d) == doctest::Approx(kFRaw).epsilon(1e-9));
}

TEST_CASE("corrected and uncorrected resonance coincide in air without fringing") {
    PatchDesign d;
    d.f0 = 9e9;
    d.substrate = Substrate{1.0, 0.762e-3, 0.0, 1.0};
    d.eps_eff = 1.0;
    d.length = speed_of_light / (2.0 * 9e9);
    d.effective_length = d.length;
    d.length_extension = 0.0;
    CHECK(resonant_frequency(d) ==
          doctest::Approx(resonant_frequency_uncorrected(d)).epsilon(1e-8));
}

TEST_CASE("bandwidth factor anchors and scaling") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    CHECK(bandwidth_factor(d) == doctest::Approx(kBwFactor).epsilon(1e-12));

    PatchDesign taller = d;
    taller.substrate.height *= 2.0;
    CHECK(bandwidth_factor(taller) ==
          doctest::Approx(2.0 * bandwidth_factor(d)).epsilon(1e-12));
    CHECK(bandwidth_factor(taller) > bandwidth_factor(d));

    PatchDesign air = d;
    air.substrate.eps_r = 1.0;
    CHECK(bandwidth_factor(air) == 0.0);
}

TEST_SUITE_END();
