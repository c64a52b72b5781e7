// SPDX-License-Identifier: Apache-2.0
// Part of patchkit, a microstrip patch antenna and conformal array design toolkit.

#pragma once

#include "patchkit/design_spec.hpp"
#include "patchkit/feed_network.hpp"
#include "patchkit/metrics.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace patchkit {

/// Everything the design run produces, for callers that want the raw
/// objects rather than the serialized report.
struct DesignRun {
    PatchDesign design;
    ArrayLayout layout;
    Excitation excitation;
    RadiationPattern pattern;
    PatternMetrics metrics;
    FeedTree feed;
    FrequencyResponse sweep;
};

/// Synthesis -> array -> pattern -> feed -> sweep, on the default 1 degree
/// grid. Module failures are rethrown with the originating stage named.
DesignRun execute_design(const DesignSpecFile& spec);

/// Full machine-readable report of a design run. Deterministic: identical
/// specs produce identical documents.
nlohmann::ordered_json run_design(const DesignSpecFile& spec);

/// `theta_deg,phi_deg,intensity_db` rows, theta-major, 2-decimal fixed
/// format, dB relative to the peak (peak row 0.00). Exact pattern zeros
/// print the sentinel `-inf`. Without a cut every grid sample is emitted;
/// with one, only the two half-planes of that great circle.
std::string export_pattern_csv(const RadiationPattern& pattern,
                               std::optional<PrincipalCut> cut = std::nullopt);

/// Touchstone v1 one-port file: option line `# HZ S DB R <ref>` then
/// `<f_hz> <20log10|Gamma|> <phase_deg>` per sample, ascending frequency.
/// Exact-zero reflection samples are floored at -300 dB so the file stays
/// numeric.
std::string export_touchstone_s1p(const FrequencyResponse& response);

/// Plain-text dimension table for the synth subcommand.
std::string format_design_table(const PatchDesign& design);

/// Plain-text feed summary: sections down one root-to-leaf path, the path
/// spread and the root match.
std::string format_feed_summary(const FeedTree& tree);

} // namespace patchkit
