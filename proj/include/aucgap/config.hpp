#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aucgap/grouping.hpp"

namespace aucgap {

enum class TaskKind { binary, multiclass, real_threshold };

std::string to_string(TaskKind task);
TaskKind parse_task(const std::string& name); // ConfigError on unknown name

struct BootstrapConfig {
    bool enabled = false;
    std::size_t n_resamples = 1000;
    std::uint64_t seed = 0;
};

struct ExplicitGroupConfig {
    std::string name;
    std::map<std::string, std::string> where; // empty matches every record
};

// Declarative audit description. Defaults here are the CLI defaults; the
// library itself (validate_groups) defaults min_pos/min_neg to 1.
struct AuditConfig {
    std::string input;
    std::string model; // report/plot label; defaults to the input file stem
    TaskKind task = TaskKind::binary;

    // binary: model score; real-threshold: predicted value.
    std::string score_column = "score";
    // multiclass: class name -> score column.
    std::map<std::string, std::string> score_columns;
    // binary: class literal; real-threshold: real-valued ground truth.
    std::string label_column = "label";
    std::string positive_label = "1";
    std::optional<std::string> negative_label;
    std::optional<double> threshold; // real-threshold cut point

    std::vector<std::string> attributes; // extra attribute columns to load
    std::vector<std::string> group_by;
    std::vector<std::vector<std::string>> intersect;
    std::vector<ExplicitGroupConfig> explicit_groups;
    std::vector<std::string> class_filter; // multiclass: restrict the sweep

    std::optional<std::string> fold_column;
    std::size_t min_pos = 10;
    std::size_t min_neg = 10;
    BootstrapConfig bootstrap;

    std::string report_out; // empty: do not write a report file
    std::string plot_out;   // empty: do not write plot data
    bool allow_missing = false; // blank attribute cells become "(missing)"
};

// Strict conversion: unknown keys and ill-typed values are ConfigErrors.
AuditConfig config_from_json(const nlohmann::json& j);

// Reads a JSON config file; malformed JSON is a ConfigError, an unreadable
// file an IoError.
AuditConfig load_config_file(const std::filesystem::path& path);

// Canonical JSON form of the effective config (defaults materialized, keys
// sorted); this is what the report's config digest hashes.
nlohmann::json config_to_json(const AuditConfig& config);

// Header-independent consistency checks (task-specific fields present,
// group specs non-empty, bounds sane); throws ConfigError.
void validate_config(const AuditConfig& config);

// All columns that must be loaded as attributes: the declared extras plus
// every column referenced by a group spec. Sorted, unique.
std::vector<std::string> attribute_columns(const AuditConfig& config);

// Group specs in declaration order: group_by, then intersect, then
// explicit groups.
std::vector<GroupSpec> group_specs(const AuditConfig& config);

} // namespace aucgap
