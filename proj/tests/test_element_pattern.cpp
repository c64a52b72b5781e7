// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/element_pattern.hpp"
#include "patchkit/metrics.hpp"

#include <doctest.h>

#include <cmath>

using namespace patchkit;

namespace {

const Substrate kBoard{2.94, 0.762e-3, 0.0345e-3, 0.8};

} // namespace

TEST_SUITE_BEGIN("element_pattern");

TEST_CASE("grid factories satisfy the grid invariants") {
    const auto hemi = SphericalGrid::upper_hemisphere();
    CHECK(hemi.theta.size() == 91);
    CHECK(hemi.phi.size() == 360);
    CHECK(hemi.theta.front() == 0.0);
    CHECK(hemi.theta.back() == doctest::Approx(std::acos(-1.0) / 2.0));

    const auto sphere = SphericalGrid::full_sphere();
    CHECK(sphere.theta.size() == 181);
    CHECK(sphere.theta.back() == doctest::Approx(std::acos(-1.0)));
}

TEST_CASE("invalid grids are rejected") {
    SphericalGrid g = SphericalGrid::upper_hemisphere(10.0);
    g.theta[0] = 0.01;  // no boresight sample
    CHECK_THROWS_AS(g.validate(), std::domain_error);

    SphericalGrid g2 = SphericalGrid::upper_hemisphere(10.0);
    g2.phi[1] = g2.phi[0];  // not strictly increasing
    CHECK_THROWS_AS(g2.validate(), std::domain_error);

    SphericalGrid g3 = SphericalGrid::upper_hemisphere(10.0);
    g3.phi.back() = 7.0;  // past 2 pi
    CHECK_THROWS_AS(g3.validate(), std::domain_error);
}

TEST_CASE("pattern construction normalizes and validates") {
    const auto grid = SphericalGrid::upper_hemisphere(10.0);
    std::vector<double> u(grid.size(), 0.25);
    const RadiationPattern p(grid, u, 9e9);
    for (double v : p.intensity()) CHECK(v == 1.0);

    CHECK_THROWS_AS(RadiationPattern(grid, std::vector<double>(grid.size(), 0.0), 9e9),
                    std::domain_error);
    std::vector<double> bad(grid.size(), 1.0);
    bad[3] = -0.5;
    CHECK_THROWS_AS(RadiationPattern(grid, bad, 9e9), std::domain_error);
    CHECK_THROWS_AS(RadiationPattern(grid, std::vector<double>(5, 1.0), 9e9),
                    std::domain_error);
}

TEST_CASE("patch pattern peaks at boresight") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    const auto p = patch_element_pattern(d, SphericalGrid::upper_hemisphere());
    for (std::size_t j = 0; j < p.grid().phi.size(); ++j)
        CHECK(p.at(0, j) == 1.0);
    for (double v : p.intensity()) CHECK(v <= 1.0);
}

TEST_CASE("patch pattern vanishes at the horizon on the H plane") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    const auto p = patch_element_pattern(d, SphericalGrid::upper_hemisphere());
    const std::size_t horizon = p.grid().theta.size() - 1;
    CHECK(p.at(horizon, 90) == 0.0);
    CHECK(p.at(horizon, 270) == 0.0);
}

TEST_CASE("principal cuts are mirror symmetric") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    const auto p = patch_element_pattern(d, SphericalGrid::upper_hemisphere());
    for (std::size_t i = 0; i < p.grid().theta.size(); ++i) {
        CHECK(std::abs(p.at(i, 0) - p.at(i, 180)) < 1e-12);
        CHECK(std::abs(p.at(i, 90) - p.at(i, 270)) < 1e-12);
    }
}

TEST_CASE("integrated power converges under grid refinement") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    const double p1 =
        4.0 * std::acos(-1.0) /
        directivity(patch_element_pattern(d, SphericalGrid::upper_hemisphere(1.0)));
    const double p05 =
        4.0 * std::acos(-1.0) /
        directivity(patch_element_pattern(d, SphericalGrid::upper_hemisphere(0.5)));
    CHECK(std::abs(p1 - p05) / p05 < 1e-3);
}

TEST_CASE("element directivity lands in the expected range") {
    const PatchDesign d = synthesize_patch(9e9, kBoard);
    const auto p = patch_element_pattern(d, SphericalGrid::upper_hemisphere());
    const double dbi = 10.0 * std::log10(directivity(p));
    CHECK(dbi > 5.0);
    CHECK(dbi < 8.0);
    // regression anchor from an independent quadrature of the closed form
    CHECK(dbi == doctest::Approx(6.7117).epsilon(1e-3));
}

TEST_CASE("isotropic hemisphere pattern is unity with directivity 2") {
    const auto grid = SphericalGrid::upper_hemisphere();
    const auto p = isotropic_hemisphere_pattern(grid);
    for (double v : p.intensity()) CHECK(v == 1.0);
    CHECK(directivity(p) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("full sphere isotropic fixture has directivity 1") {
    const auto p = isotropic_sphere_pattern(SphericalGrid::full_sphere());
    CHECK(directivity(p) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("hemisphere pattern on a full sphere grid is zero below the horizon") {
    const auto grid = SphericalGrid::full_sphere(10.0);
    const auto p = isotropic_hemisphere_pattern(grid);
    for (std::size_t i = 0; i < grid.theta.size(); ++i)
        for (std::size_t j = 0; j < grid.phi.size(); ++j)
            CHECK(p.at(i, j) == (grid.theta[i] > std::acos(-1.0) / 2.0 ? 0.0 : 1.0));
}

TEST_SUITE_END();
