// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#include "patchkit/design_spec.hpp"
#include "patchkit/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_failure("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_failure("cannot read spec file: " + path);
    return buf.str();
}

/// Data goes to --out when given, stdout otherwise.
void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw io_failure("cannot open output file: " + out_path);
    out << data;
    out.flush();
    if (!out) throw io_failure("cannot write output file: " + out_path);
}

patchkit::DesignSpecFile load_spec(const std::string& path) {
    return patchkit::parse_spec(read_file(path));
}

} // namespace

int main(int argc, char** argv) {
    using namespace patchkit;

    CLI::App app{"patchkit: rectangular microstrip patch and conformal array design"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_path;
    std::string cut_name = "full";

    auto* synth = app.add_subcommand("synth", "Print the synthesized patch dimensions");
    synth->add_option("--spec", spec_path, "design spec JSON file")->required();
    synth->add_option("--out", out_path, "output file (default stdout)");

    auto* pattern = app.add_subcommand("pattern", "Write the total radiation pattern as CSV");
    pattern->add_option("--spec", spec_path, "design spec JSON file")->required();
    pattern->add_option("--out", out_path, "output file (default stdout)");
    pattern->add_option("--cut", cut_name, "full, e or h (default full)")
        ->check(CLI::IsMember({"full", "e", "h"}));

    auto* sweep = app.add_subcommand("sweep", "Write the S11 sweep as Touchstone .s1p");
    sweep->add_option("--spec", spec_path, "design spec JSON file")->required();
    sweep->add_option("--out", out_path, "output .s1p file")->required();

    auto* feed = app.add_subcommand("feed", "Print the corporate feed summary");
    feed->add_option("--spec", spec_path, "design spec JSON file")->required();
    feed->add_option("--out", out_path, "output file (default stdout)");

    auto* report = app.add_subcommand("report", "Run the full design and print the JSON report");
    report->add_option("--spec", spec_path, "design spec JSON file")->required();
    report->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (synth->parsed()) {
            const auto spec = load_spec(spec_path);
            emit(format_design_table(synthesize_patch(spec.f0, spec.substrate)), out_path);
        } else if (pattern->parsed()) {
            const auto spec = load_spec(spec_path);
            const DesignRun run = execute_design(spec);
            std::optional<PrincipalCut> cut;
            if (cut_name == "e") cut = PrincipalCut::e_plane;
            if (cut_name == "h") cut = PrincipalCut::h_plane;
            emit(export_pattern_csv(run.pattern, cut), out_path);
        } else if (sweep->parsed()) {
            const auto spec = load_spec(spec_path);
            const DesignRun run = execute_design(spec);
            emit(export_touchstone_s1p(run.sweep), out_path);
            const auto bw = bandwidth_minus_10db(run.sweep);
            if (bw)
                std::cout << "bandwidth_minus_10db_mhz " << *bw * 1e-6 << "\n";
            else
                std::cout << "bandwidth_minus_10db_mhz none\n";
        } else if (feed->parsed()) {
            const auto spec = load_spec(spec_path);
            const FeedTree tree =
                build_corporate_feed(spec.array_n, spec.element_impedance,
                                     spec.port_impedance, spec.substrate, spec.spacing,
                                     spec.f0);
            emit(format_feed_summary(tree), out_path);
        } else if (report->parsed()) {
            const auto spec = load_spec(spec_path);
            emit(run_design(spec).dump(2) + "\n", out_path);
        }
    } catch (const io_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
