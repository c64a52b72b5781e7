// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include "patchkit/substrate.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace patchkit {

/// Quasi-static microstrip line properties for a given trace width.
struct MicrostripLine {
    double z0 = 0.0;       // characteristic impedance, ohm
    double eps_eff = 1.0;  // effective line permittivity
};

/// Hammerstad closed forms. z0 is strictly decreasing in width/h;
/// eps_eff lies in [1, eps_r].
MicrostripLine microstrip_analyze(double width, const Substrate& substrate);

/// Inverse of microstrip_analyze by bisection over width/h in [0.05, 100].
/// Throws std::range_error naming the achievable impedance interval when the
/// target falls outside it.
double microstrip_synthesize(double z0_target, const Substrate& substrate);

/// Matching-section impedance sqrt(z_in * z_load): a quarter-wave line of
/// this impedance transforms z_load into z_in at the design frequency.
double quarter_wave_impedance(double z_in, double z_load);

/// One uniform line section of the feed. electrical_length is beta * l at
/// the design frequency, beta = (2 pi f / c) sqrt(eps_eff).
struct LineSegment {
    double z0 = 0.0;                // ohm
    double width = 0.0;             // m
    double physical_length = 0.0;   // m
    double electrical_length = 0.0; // rad at the design frequency
    double eps_eff = 1.0;
};

/// Node of the corporate divider. `segments` is the line cascade from the
/// node's upstream port down to its junction (internal nodes) or to the
/// element (leaves), ordered input to load. Internal nodes have exactly two
/// children; leaves record the element impedance.
struct FeedNode {
    std::vector<LineSegment> segments;
    double leaf_impedance = 0.0;  // > 0 iff leaf
    double design_parallel_impedance = 0.0;  // junction parallel target, internal only
    std::vector<FeedNode> children;

    bool is_leaf() const { return children.empty(); }
};

/// 1:n corporate feed: a full binary divider with identical root-to-leaf
/// path lengths, quarter-wave matched T-junctions, and microstrip line
/// geometry realized on the given substrate.
struct FeedTree {
    double design_frequency = 0.0;   // Hz
    double port_impedance = 0.0;     // ohm
    double element_impedance = 0.0;  // ohm
    FeedNode root;

    std::size_t leaf_count() const;
    /// Sum of electrical lengths from the root port to each leaf, in rad.
    std::vector<double> path_electrical_lengths() const;
};

/// Builds the corporate divider. n must be a power of two. Leaf arms run at
/// the element impedance; every junction is restored to the port impedance
/// by a quarter-wave section, so the root is matched at the design
/// frequency.
FeedTree build_corporate_feed(std::size_t n, double element_impedance,
                              double port_impedance, const Substrate& substrate,
                              double spacing, double frequency);

/// Input impedance of a lossless line of impedance z0 and electrical length
/// beta_l terminated in z_load (ABCD transform, safe at beta_l = pi/2).
std::complex<double> line_input_impedance(std::complex<double> z_load, double z0,
                                          double beta_l);

/// Reflection coefficient seen at the root port at an arbitrary frequency,
/// from the ABCD cascade of every branch. Leaves with infinite impedance
/// (open circuits) are handled exactly; |Gamma| <= 1 always.
std::complex<double> feed_input_reflection(const FeedTree& tree, double frequency);

} // namespace patchkit
