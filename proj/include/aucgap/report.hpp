#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aucgap/adapters.hpp"
#include "aucgap/config.hpp"
#include "aucgap/gap.hpp"

namespace aucgap {

// Provenance block of a report. generated_at is the only field that is not
// a pure function of input, config, and seed.
struct ReportMetadata {
    std::string tool_version;
    std::string generated_at;  // ISO 8601 UTC
    std::string input_digest;  // "sha256:<hex>" of the raw input bytes
    std::string config_digest; // "sha256:<hex>" of the canonical config JSON
    std::string model;
    TaskKind task = TaskKind::binary;
};

// Complete audit result. Binary and real-threshold audits fill `analysis`;
// multiclass audits fill `per_class` (one entry per audited class).
struct GapReport {
    ReportMetadata metadata;
    std::optional<GapAnalysis> analysis;
    std::map<std::string, ClassGapResult> per_class;
};

// Current wall-clock time as "YYYY-MM-DDTHH:MM:SSZ".
std::string iso_utc_now();

// Versioned JSON form of a report. All object keys serialize sorted, and
// numbers use shortest round-trip form, so identical audits produce
// byte-identical documents apart from metadata.generated_at.
nlohmann::json report_to_json(const GapReport& report);

// Aligned plain-text summary for standard output (4 decimal places; the
// JSON report carries full precision).
std::string render_table(const GapReport& report);

// Merges parsed report documents into the three-panel plot-data document
// (overall AUC per model, subgroup AUCs, gap per model). Duplicate model
// names or unsupported schema versions are ConfigErrors.
nlohmann::json plot_data_from_reports(const std::vector<nlohmann::json>& reports);

// Canonical serialization used for every JSON artifact: 2-space indent,
// UTF-8 passthrough, trailing newline.
std::string dump_json(const nlohmann::json& j);

} // namespace aucgap
