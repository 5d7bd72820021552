#include "aucgap/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "aucgap/adapters.hpp"
#include "aucgap/errors.hpp"
#include "aucgap/sha256.hpp"
#include "aucgap/version.hpp"

namespace aucgap {

namespace {

std::string join_sorted(const std::set<std::string>& values) {
    std::string out;
    for (const std::string& value : values) {
        if (!out.empty()) {
            out += ", ";
        }
        out += "\"" + value + "\"";
    }
    return out;
}

std::size_t require_column(const CsvTable& table, const std::string& name,
                           const std::string& role) {
    if (const auto index = table.find(name)) {
        return *index;
    }
    std::string header;
    for (const std::string& column : table.header) {
        if (!header.empty()) {
            header += ", ";
        }
        header += column;
    }
    throw ConfigError("input has no column \"" + name + "\" (needed for " +
                      role + "); header: " + header);
}

double parse_double_cell(const std::string& cell, std::size_t line,
                         const std::string& column) {
    if (cell.empty()) {
        throw ParseError(line, column, "empty cell");
    }
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end) {
        throw ParseError(line, column, "not numeric: \"" + cell + "\"");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line, column, "not finite: \"" + cell + "\"");
    }
    return value;
}

// Attribute columns resolved against the header once, then read per row.
struct AttributeReader {
    std::vector<std::pair<std::string, std::size_t>> columns;
    bool allow_missing = false;

    AttributeReader(const CsvTable& table, const AuditConfig& config) {
        allow_missing = config.allow_missing;
        for (const std::string& name : attribute_columns(config)) {
            columns.emplace_back(name,
                                 require_column(table, name, "attributes"));
        }
    }

    std::map<std::string, std::string> read(
        const std::vector<std::string>& row, std::size_t line) const {
        std::map<std::string, std::string> attributes;
        for (const auto& [name, index] : columns) {
            const std::string& cell = row[index];
            if (cell.empty()) {
                if (!allow_missing) {
                    throw ParseError(
                        line, name,
                        "missing value for attribute \"" + name +
                            "\" (pass --allow-missing to audit such rows "
                            "under \"(missing)\")");
                }
                attributes.emplace(name, "(missing)");
            } else {
                attributes.emplace(name, cell);
            }
        }
        return attributes;
    }
};

struct FoldReader {
    std::optional<std::size_t> index;
    std::string column;

    FoldReader(const CsvTable& table, const AuditConfig& config) {
        if (config.fold_column) {
            column = *config.fold_column;
            index = require_column(table, column, "fold_column");
        }
    }

    std::optional<std::string> read(const std::vector<std::string>& row,
                                    std::size_t line) const {
        if (!index) {
            return std::nullopt;
        }
        const std::string& cell = row[*index];
        if (cell.empty()) {
            throw ParseError(line, column, "empty fold id");
        }
        return cell;
    }
};

std::vector<EvaluationRecord> ingest_binary(const CsvTable& table,
                                            const AuditConfig& config) {
    const std::size_t score_index =
        require_column(table, config.score_column, "score_column");
    const std::size_t label_index =
        require_column(table, config.label_column, "label_column");
    const AttributeReader attributes(table, config);
    const FoldReader folds(table, config);

    // First pass: survey the label literals so a negative literal can be
    // inferred when the config names only the positive one.
    std::set<std::string> literals;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::string& literal = table.rows[r][label_index];
        if (literal.empty()) {
            throw ParseError(table.row_lines[r], config.label_column,
                             "empty label cell");
        }
        literals.insert(literal);
        if (!config.negative_label && literals.size() > 2) {
            throw ParseError(table.row_lines[r], config.label_column,
                             "more than two label literals observed: " +
                                 join_sorted(literals));
        }
    }

    std::optional<std::string> negative = config.negative_label;
    if (!negative) {
        if (!literals.contains(config.positive_label)) {
            throw ConfigError("positive label \"" + config.positive_label +
                              "\" never appears; observed label literals: " +
                              join_sorted(literals));
        }
        for (const std::string& literal : literals) {
            if (literal != config.positive_label) {
                negative = literal;
            }
        }
    }

    std::vector<EvaluationRecord> records;
    records.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::vector<std::string>& row = table.rows[r];
        const std::size_t line = table.row_lines[r];
        EvaluationRecord record;
        record.score =
            parse_double_cell(row[score_index], line, config.score_column);
        const std::string& literal = row[label_index];
        if (literal == config.positive_label) {
            record.label = BinaryLabel::positive;
        } else if (negative && literal == *negative) {
            record.label = BinaryLabel::negative;
        } else {
            throw ParseError(line, config.label_column,
                             "unknown label literal \"" + literal +
                                 "\" (expected \"" + config.positive_label +
                                 "\"" +
                                 (negative ? " or \"" + *negative + "\""
                                           : std::string()) +
                                 ")");
        }
        record.attributes = attributes.read(row, line);
        record.fold_id = folds.read(row, line);
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<MulticlassRecord> ingest_multiclass(const CsvTable& table,
                                                const AuditConfig& config) {
    std::vector<std::pair<std::string, std::size_t>> class_columns;
    std::set<std::string> class_names;
    for (const auto& [class_name, column] : config.score_columns) {
        class_columns.emplace_back(
            class_name,
            require_column(table, column,
                           "score_columns[\"" + class_name + "\"]"));
        class_names.insert(class_name);
    }
    const std::size_t label_index =
        require_column(table, config.label_column, "label_column");
    const AttributeReader attributes(table, config);
    const FoldReader folds(table, config);

    std::vector<MulticlassRecord> records;
    records.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::vector<std::string>& row = table.rows[r];
        const std::size_t line = table.row_lines[r];
        MulticlassRecord record;
        for (const auto& [class_name, index] : class_columns) {
            record.class_scores.emplace(
                class_name,
                parse_double_cell(row[index], line,
                                  config.score_columns.at(class_name)));
        }
        const std::string& true_class = row[label_index];
        if (true_class.empty()) {
            throw ParseError(line, config.label_column, "empty label cell");
        }
        if (!class_names.contains(true_class)) {
            throw ParseError(line, config.label_column,
                             "unknown class \"" + true_class +
                                 "\" (classes: " + join_sorted(class_names) +
                                 ")");
        }
        record.true_class = true_class;
        record.attributes = attributes.read(row, line);
        record.fold_id = folds.read(row, line);
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<RealTargetRecord> ingest_real(const CsvTable& table,
                                          const AuditConfig& config) {
    const std::size_t score_index =
        require_column(table, config.score_column, "score_column");
    const std::size_t label_index =
        require_column(table, config.label_column, "label_column");
    const AttributeReader attributes(table, config);
    const FoldReader folds(table, config);

    std::vector<RealTargetRecord> records;
    records.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::vector<std::string>& row = table.rows[r];
        const std::size_t line = table.row_lines[r];
        RealTargetRecord record;
        record.predicted_value =
            parse_double_cell(row[score_index], line, config.score_column);
        record.true_value =
            parse_double_cell(row[label_index], line, config.label_column);
        record.attributes = attributes.read(row, line);
        record.fold_id = folds.read(row, line);
        records.push_back(std::move(record));
    }
    return records;
}

} // namespace

Dataset ingest(const CsvTable& table, const AuditConfig& config) {
    if (table.rows.empty()) {
        throw DegenerateDataError("input contains no data rows");
    }
    switch (config.task) {
    case TaskKind::binary:
        return ingest_binary(table, config);
    case TaskKind::multiclass:
        return ingest_multiclass(table, config);
    case TaskKind::real_threshold:
        return ingest_real(table, config);
    }
    throw std::invalid_argument("unreachable task kind");
}

GapReport run_audit(const AuditConfig& config) {
    AuditConfig effective = config;
    if (effective.model.empty()) {
        effective.model =
            std::filesystem::path(effective.input).stem().string();
    }
    validate_config(effective);

    const CsvTable table = read_csv_file(effective.input);
    const Dataset dataset = ingest(table, effective);

    GapReport report;
    report.metadata.tool_version = kToolVersion;
    report.metadata.generated_at = iso_utc_now();
    report.metadata.input_digest =
        "sha256:" + sha256_hex_file(effective.input);
    report.metadata.config_digest =
        "sha256:" + sha256_hex(dump_json(config_to_json(effective)));
    report.metadata.model = effective.model;
    report.metadata.task = effective.task;

    const std::vector<GroupSpec> specs = group_specs(effective);
    GapOptions options;
    options.min_pos = effective.min_pos;
    options.min_neg = effective.min_neg;
    options.bootstrap = effective.bootstrap.enabled;
    options.n_resamples = effective.bootstrap.n_resamples;
    options.seed = effective.bootstrap.seed;

    switch (effective.task) {
    case TaskKind::binary: {
        const auto& records = std::get<std::vector<EvaluationRecord>>(dataset);
        report.analysis = analyze_gaps(records, specs, options);
        break;
    }
    case TaskKind::multiclass: {
        const auto& records = std::get<std::vector<MulticlassRecord>>(dataset);
        report.per_class = per_class_gap_sweep(records, specs, options,
                                               effective.class_filter);
        bool any_audited = false;
        for (const auto& [name, entry] : report.per_class) {
            any_audited = any_audited || entry.analysis.has_value();
        }
        if (!any_audited) {
            throw DegenerateDataError("no class could be audited");
        }
        break;
    }
    case TaskKind::real_threshold: {
        const auto& records = std::get<std::vector<RealTargetRecord>>(dataset);
        const std::vector<EvaluationRecord> binary =
            threshold_real(records, *effective.threshold);
        report.analysis = analyze_gaps(binary, specs, options);
        break;
    }
    }

    if (report.analysis && !report.analysis->overall.auc) {
        throw DegenerateDataError("overall AUC undefined: " +
                                  report.analysis->overall.undefined_reason);
    }
    return report;
}

} // namespace aucgap
