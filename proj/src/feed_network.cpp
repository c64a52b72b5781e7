// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/feed_network.hpp"

#include "patchkit/constants.hpp"

#include <cmath>
#include <numbers>

namespace patchkit {

namespace {

constexpr double pi = std::numbers::pi;

// Impedances carried as homogeneous pairs z = num/den so open circuits
// (1, 0) and quarter-wave poles stay exact through the cascade.
struct ZPair {
    std::complex<double> num;
    std::complex<double> den;

    void normalize() {
        const double s = std::abs(num) + std::abs(den);
        if (s > 0.0) {
            num /= s;
            den /= s;
        }
    }
};

ZPair through_line(ZPair z, double z0, double beta_l) {
    const double c = std::cos(beta_l);
    const double s = std::sin(beta_l);
    const std::complex<double> j{0.0, 1.0};
    // ABCD entries of a lossless line act projectively: z' = (Az + B)/(Cz + D)
    ZPair out{c * z.num + j * z0 * s * z.den, (j * s / z0) * z.num + c * z.den};
    out.normalize();
    return out;
}

ZPair parallel(ZPair a, ZPair b) {
    ZPair out{a.num * b.num, a.num * b.den + b.num * a.den};
    out.normalize();
    return out;
}

double guided_quarter_wave(double frequency, double eps_eff) {
    return speed_of_light / (frequency * std::sqrt(eps_eff)) / 4.0;
}

LineSegment make_segment(double z0_target, double physical_length,
                         const Substrate& substrate, double frequency) {
    LineSegment seg;
    seg.width = microstrip_synthesize(z0_target, substrate);
    const MicrostripLine line = microstrip_analyze(seg.width, substrate);
    seg.z0 = line.z0;
    seg.eps_eff = line.eps_eff;
    seg.physical_length = physical_length;
    seg.electrical_length = (2.0 * pi * frequency / speed_of_light) *
                            std::sqrt(line.eps_eff) * physical_length;
    return seg;
}

// Quarter-wave section of the segment's own guided wavelength.
LineSegment make_quarter_wave(double z0_target, const Substrate& substrate,
                              double frequency) {
    const double width = microstrip_synthesize(z0_target, substrate);
    const MicrostripLine line = microstrip_analyze(width, substrate);
    return make_segment(z0_target, guided_quarter_wave(frequency, line.eps_eff),
                        substrate, frequency);
}

ZPair input_impedance(const FeedNode& node, double frequency, double design_frequency) {
    ZPair z;
    if (node.is_leaf()) {
        if (std::isinf(node.leaf_impedance))
            z = {{1.0, 0.0}, {0.0, 0.0}};
        else
            z = {{node.leaf_impedance, 0.0}, {1.0, 0.0}};
    } else {
        z = parallel(input_impedance(node.children[0], frequency, design_frequency),
                     input_impedance(node.children[1], frequency, design_frequency));
    }
    // Segments are stored input->load; transform the load back up through
    // them. Electrical length scales linearly with frequency (TEM lines).
    for (auto it = node.segments.rbegin(); it != node.segments.rend(); ++it)
        z = through_line(z, it->z0, it->electrical_length * frequency / design_frequency);
    return z;
}

} // namespace

MicrostripLine microstrip_analyze(double width, const Substrate& substrate) {
    check_positive(width, "width");
    substrate.validate();
    const double er = substrate.eps_r;
    const double u = width / substrate.height;

    MicrostripLine line;
    line.eps_eff = (er + 1.0) / 2.0 + (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 / u);
    if (u < 1.0) {
        line.eps_eff += (er - 1.0) / 2.0 * 0.04 * (1.0 - u) * (1.0 - u);
        line.z0 = free_space_impedance / (2.0 * pi * std::sqrt(line.eps_eff)) *
                  std::log(8.0 / u + u / 4.0);
    } else {
        line.z0 = free_space_impedance /
                  (std::sqrt(line.eps_eff) * (u + 1.393 + 0.667 * std::log(u + 1.444)));
    }
    return line;
}

double microstrip_synthesize(double z0_target, const Substrate& substrate) {
    check_positive(z0_target, "z0_target");
    substrate.validate();
    const double h = substrate.height;
    double u_lo = 0.05, u_hi = 100.0;
    const double z_max = microstrip_analyze(u_lo * h, substrate).z0;
    const double z_min = microstrip_analyze(u_hi * h, substrate).z0;
    if (z0_target > z_max || z0_target < z_min)
        throw std::range_error("z0 " + std::to_string(z0_target) +
                               " ohm is outside the achievable range [" +
                               std::to_string(z_min) + ", " + std::to_string(z_max) +
                               "] ohm for this substrate");
    // z0(u) is monotone decreasing, so plain bisection on u.
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (u_lo + u_hi);
        if (microstrip_analyze(mid * h, substrate).z0 > z0_target)
            u_lo = mid;
        else
            u_hi = mid;
    }
    return 0.5 * (u_lo + u_hi) * h;
}

double quarter_wave_impedance(double z_in, double z_load) {
    check_positive(z_in, "z_in");
    check_positive(z_load, "z_load");
    return std::sqrt(z_in * z_load);
}

std::size_t FeedTree::leaf_count() const {
    std::size_t count = 0;
    const auto walk = [&count](const auto& self, const FeedNode& node) -> void {
        if (node.is_leaf()) {
            ++count;
            return;
        }
        for (const auto& child : node.children) self(self, child);
    };
    walk(walk, root);
    return count;
}

std::vector<double> FeedTree::path_electrical_lengths() const {
    std::vector<double> lengths;
    const auto walk = [&lengths](const auto& self, const FeedNode& node,
                                 double acc) -> void {
        for (const auto& seg : node.segments) acc += seg.electrical_length;
        if (node.is_leaf()) {
            lengths.push_back(acc);
            return;
        }
        for (const auto& child : node.children) self(self, child, acc);
    };
    walk(walk, root, 0.0);
    return lengths;
}

FeedTree build_corporate_feed(std::size_t n, double element_impedance,
                              double port_impedance, const Substrate& substrate,
                              double spacing, double frequency) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::domain_error("corporate feed element count must be a power of two");
    check_positive(element_impedance, "element_impedance");
    check_positive(port_impedance, "port_impedance");
    check_positive(spacing, "spacing");
    check_positive(frequency, "frequency");
    substrate.validate();

    FeedTree tree;
    tree.design_frequency = frequency;
    tree.port_impedance = port_impedance;
    tree.element_impedance = element_impedance;

    const MicrostripLine port_line = microstrip_analyze(
        microstrip_synthesize(port_impedance, substrate), substrate);
    const double root_stub = 2.0 * guided_quarter_wave(frequency, port_line.eps_eff);

    std::size_t levels = 0;
    for (std::size_t m = n; m > 1; m >>= 1) ++levels;

    if (levels == 0) {
        // degenerate 1:1 feed: a single matched through line
        tree.root.leaf_impedance = element_impedance;
        tree.root.segments = {make_segment(element_impedance, root_stub, substrate,
                                           frequency)};
        return tree;
    }

    // Leaves sit at level 0, the root junction at `levels`. The edge above a
    // leaf is half an element spacing; the edge above a level-l junction is
    // 2^(l-1) spacings (the run from its parent junction midway between
    // groups); the root's edge is the port feed stub. Leaf arms run at the
    // element impedance, everything above at the port impedance, and each
    // junction carries a quarter-wave section restoring its parallel
    // combination to the port impedance.
    const auto build = [&](const auto& self, std::size_t level) -> FeedNode {
        FeedNode node;
        if (level == 0) {
            node.leaf_impedance = element_impedance;
            node.segments = {make_segment(element_impedance, spacing / 2.0,
                                          substrate, frequency)};
            return node;
        }
        node.children.push_back(self(self, level - 1));
        node.children.push_back(self(self, level - 1));
        const double branch_z = level == 1 ? element_impedance : port_impedance;
        node.design_parallel_impedance = branch_z / 2.0;
        const double zt = quarter_wave_impedance(node.design_parallel_impedance,
                                                 port_impedance);
        const double arm = level == levels
                               ? root_stub
                               : spacing * std::pow(2.0, static_cast<double>(level) - 1.0);
        node.segments = {make_segment(port_impedance, arm, substrate, frequency),
                         make_quarter_wave(zt, substrate, frequency)};
        return node;
    };
    tree.root = build(build, levels);
    return tree;
}

std::complex<double> line_input_impedance(std::complex<double> z_load, double z0,
                                          double beta_l) {
    check_positive(z0, "z0");
    ZPair z{z_load, {1.0, 0.0}};
    z = through_line(z, z0, beta_l);
    return z.num / z.den;
}

std::complex<double> feed_input_reflection(const FeedTree& tree, double frequency) {
    check_positive(frequency, "frequency");
    const ZPair z = input_impedance(tree.root, frequency, tree.design_frequency);
    const double zp = tree.port_impedance;
    return (z.num - zp * z.den) / (z.num + zp * z.den);
}

} // namespace patchkit
