#include "aucgap/report.hpp"

#include <cstdio>
#include <ctime>
#include <set>

#include "aucgap/errors.hpp"
#include "aucgap/version.hpp"

namespace aucgap {

namespace {

using nlohmann::json;

json auc_value_json(const AucValue& value) {
    return json{{"value", value.value},
                {"n_pos", value.n_pos},
                {"n_neg", value.n_neg}};
}

json auc_result_json(const GroupAucResult& result) {
    json j;
    if (result.auc) {
        j = auc_value_json(*result.auc);
        if (!result.per_fold.empty()) {
            json per_fold;
            for (const auto& [fold, value] : result.per_fold) {
                per_fold[fold] = auc_value_json(value);
            }
            j["per_fold"] = std::move(per_fold);
        }
    } else {
        j["undefined_reason"] = result.undefined_reason;
    }
    return j;
}

json analysis_body(const GapAnalysis& analysis) {
    json body;
    body["overall_auc"] = auc_result_json(analysis.overall);

    json groups;
    for (const auto& [name, entry] : analysis.table.entries) {
        json group;
        group["valid"] = entry.validity.valid;
        group["n_records"] = entry.validity.n_records;
        group["n_pos"] = entry.validity.n_pos;
        group["n_neg"] = entry.validity.n_neg;
        if (!entry.validity.valid) {
            group["exclusion_reason"] = to_string(entry.validity.reason);
        } else if (entry.result.auc) {
            group["auc"] = auc_value_json(*entry.result.auc);
            if (!entry.result.per_fold.empty()) {
                json per_fold;
                for (const auto& [fold, value] : entry.result.per_fold) {
                    per_fold[fold] = auc_value_json(value);
                }
                group["per_fold"] = std::move(per_fold);
            }
        } else {
            group["undefined_reason"] = entry.result.undefined_reason;
        }
        groups[name] = std::move(group);
    }
    body["groups"] = std::move(groups);

    body["gap"] = json{{"value", analysis.gap.value},
                       {"max_group", analysis.gap.arg_max_group},
                       {"min_group", analysis.gap.arg_min_group},
                       {"n_valid_groups", analysis.gap.n_valid_groups},
                       {"degenerate", analysis.gap.degenerate}};

    if (analysis.interval) {
        body["bootstrap"] = json{{"method", kBootstrapMethod},
                                 {"confidence_level", 0.95},
                                 {"lower", analysis.interval->lower},
                                 {"upper", analysis.interval->upper},
                                 {"n_resamples", analysis.interval->n_resamples},
                                 {"skipped", analysis.interval->skipped},
                                 {"seed", analysis.interval->seed}};
    }

    body["warnings"] = analysis.warnings;
    return body;
}

} // namespace

std::string iso_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

json report_to_json(const GapReport& report) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["metadata"] = json{{"tool_version", report.metadata.tool_version},
                         {"generated_at", report.metadata.generated_at},
                         {"input_digest", report.metadata.input_digest},
                         {"config_digest", report.metadata.config_digest},
                         {"model", report.metadata.model},
                         {"task", to_string(report.metadata.task)}};

    if (report.analysis) {
        json body = analysis_body(*report.analysis);
        for (auto& [key, value] : body.items()) {
            j[key] = std::move(value);
        }
    }

    if (!report.per_class.empty()) {
        json classes;
        bool have_max = false;
        double max_gap = 0.0;
        std::string max_class;
        for (const auto& [name, entry] : report.per_class) {
            if (entry.analysis) {
                classes[name] = analysis_body(*entry.analysis);
                const double gap = entry.analysis->gap.value;
                if (!have_max || gap > max_gap) {
                    have_max = true;
                    max_gap = gap;
                    max_class = name;
                }
            } else {
                classes[name] = json{{"error", entry.error}};
            }
        }
        j["classes"] = std::move(classes);
        if (have_max) {
            j["max_gap_over_classes"] =
                json{{"value", max_gap}, {"class", max_class}};
        }
    }
    return j;
}

namespace {

std::string format_auc(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

// Pad by code points, not bytes: group names may contain the multi-byte
// conjunction sign, which occupies one display column.
std::size_t display_width(const std::string& text) {
    std::size_t width = 0;
    for (const unsigned char c : text) {
        if ((c & 0xC0) != 0x80) {
            ++width;
        }
    }
    return width;
}

std::string pad_right(const std::string& text, std::size_t width) {
    std::string out = text;
    const std::size_t current = display_width(text);
    if (current < width) {
        out.append(width - current, ' ');
    }
    return out;
}

std::string pad_left(const std::string& text, std::size_t width) {
    std::string out;
    const std::size_t current = display_width(text);
    if (current < width) {
        out.append(width - current, ' ');
    }
    out += text;
    return out;
}

void render_body(const GapAnalysis& analysis, std::string& out) {
    if (analysis.overall.auc) {
        out += "overall AUC: " + format_auc(analysis.overall.auc->value) +
               "  (" + std::to_string(analysis.overall.auc->n_pos) + " pos, " +
               std::to_string(analysis.overall.auc->n_neg) + " neg)\n";
    } else {
        out += "overall AUC: undefined (" + analysis.overall.undefined_reason +
               ")\n";
    }
    out += "\n";

    std::size_t name_width = display_width("group");
    for (const auto& [name, entry] : analysis.table.entries) {
        name_width = std::max(name_width, display_width(name));
    }
    constexpr std::size_t kAucWidth = 8;
    constexpr std::size_t kCountWidth = 7;

    out += pad_right("group", name_width) + pad_left("AUC", kAucWidth) +
           pad_left("n_pos", kCountWidth) + pad_left("n_neg", kCountWidth) +
           "  status\n";
    for (const auto& [name, entry] : analysis.table.entries) {
        std::string auc_text = "-";
        std::string status;
        if (!entry.validity.valid) {
            status = std::string("excluded: ") + to_string(entry.validity.reason);
        } else if (entry.result.auc) {
            auc_text = format_auc(entry.result.auc->value);
            status = "ok";
        } else {
            status = "undefined: " + entry.result.undefined_reason;
        }
        out += pad_right(name, name_width) + pad_left(auc_text, kAucWidth) +
               pad_left(std::to_string(entry.validity.n_pos), kCountWidth) +
               pad_left(std::to_string(entry.validity.n_neg), kCountWidth) +
               "  " + status + "\n";
    }
    out += "\n";

    if (analysis.gap.degenerate) {
        out += "AUC gap: " + format_auc(analysis.gap.value) +
               "  (degenerate: fewer than 2 valid groups)\n";
    } else {
        out += "AUC gap: " + format_auc(analysis.gap.value) + "  (max " +
               analysis.gap.arg_max_group + ", min " +
               analysis.gap.arg_min_group + "; " +
               std::to_string(analysis.gap.n_valid_groups) +
               " valid groups)\n";
    }
    if (analysis.interval) {
        out += "95% CI: [" + format_auc(analysis.interval->lower) + ", " +
               format_auc(analysis.interval->upper) + "]  (" +
               kBootstrapMethod + ", " +
               std::to_string(analysis.interval->n_resamples) +
               " resamples, seed " + std::to_string(analysis.interval->seed);
        if (analysis.interval->skipped > 0) {
            out += ", " + std::to_string(analysis.interval->skipped) +
                   " skipped";
        }
        out += ")\n";
    }
    for (const std::string& warning : analysis.warnings) {
        out += "warning: " + warning + "\n";
    }
}

} // namespace

std::string render_table(const GapReport& report) {
    std::string out;
    out += "model: " + report.metadata.model + "\n";
    out += "task: " + to_string(report.metadata.task) + "\n\n";

    if (report.analysis) {
        render_body(*report.analysis, out);
    }

    if (!report.per_class.empty()) {
        bool have_max = false;
        double max_gap = 0.0;
        std::string max_class;
        for (const auto& [name, entry] : report.per_class) {
            out += "--- class " + name + " ---\n";
            if (entry.analysis) {
                render_body(*entry.analysis, out);
                const double gap = entry.analysis->gap.value;
                if (!have_max || gap > max_gap) {
                    have_max = true;
                    max_gap = gap;
                    max_class = name;
                }
            } else {
                out += "audit skipped: " + entry.error + "\n";
            }
            out += "\n";
        }
        if (have_max) {
            out += "max gap over classes: " + format_auc(max_gap) + "  (class " +
                   max_class + ")\n";
        }
    }
    return out;
}

namespace {

void collect_body(const json& body, const std::string& model,
                  const std::string& class_name, json& overall_panel,
                  json& subgroup_panel, json& gap_panel) {
    const auto annotate = [&](json entry) {
        entry["model"] = model;
        if (!class_name.empty()) {
            entry["class"] = class_name;
        }
        return entry;
    };

    const json& overall = body.at("overall_auc");
    if (overall.contains("value")) {
        overall_panel.push_back(
            annotate(json{{"value", overall.at("value").get<double>()}}));
    }

    for (const auto& [group, entry] : body.at("groups").items()) {
        if (entry.at("valid").get<bool>() && entry.contains("auc")) {
            subgroup_panel.push_back(annotate(
                json{{"group", group},
                     {"value", entry.at("auc").at("value").get<double>()}}));
        }
    }

    const json& gap = body.at("gap");
    json gap_entry{{"value", gap.at("value").get<double>()}};
    const std::string max_group = gap.at("max_group").get<std::string>();
    const std::string min_group = gap.at("min_group").get<std::string>();
    if (!max_group.empty()) {
        gap_entry["max_group"] = max_group;
    }
    if (!min_group.empty()) {
        gap_entry["min_group"] = min_group;
    }
    gap_panel.push_back(annotate(std::move(gap_entry)));
}

} // namespace

json plot_data_from_reports(const std::vector<json>& reports) {
    if (reports.empty()) {
        throw ConfigError("no reports to merge");
    }

    json overall_panel = json::array();
    json subgroup_panel = json::array();
    json gap_panel = json::array();
    std::set<std::string> models;

    for (const json& report : reports) {
        if (!report.is_object() || !report.contains("schema_version")) {
            throw ConfigError("not a gap report: missing schema_version");
        }
        if (report.at("schema_version") != json(kReportSchemaVersion)) {
            throw ConfigError("unsupported report schema_version " +
                              report.at("schema_version").dump());
        }
        std::string model;
        try {
            model = report.at("metadata").at("model").get<std::string>();
            if (!models.insert(model).second) {
                throw ConfigError("duplicate model name \"" + model + "\"");
            }
            if (report.contains("classes")) {
                for (const auto& [class_name, body] :
                     report.at("classes").items()) {
                    if (body.contains("error")) {
                        continue;
                    }
                    collect_body(body, model, class_name, overall_panel,
                                 subgroup_panel, gap_panel);
                }
            } else {
                collect_body(report, model, "", overall_panel, subgroup_panel,
                             gap_panel);
            }
        } catch (const json::exception& e) {
            throw ConfigError("malformed report" +
                              (model.empty() ? std::string()
                                             : " for model \"" + model + "\"") +
                              ": " + e.what());
        }
    }

    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["kind"] = "plot-data";
    out["panels"] = json{{"overall_auc", std::move(overall_panel)},
                         {"subgroup_auc", std::move(subgroup_panel)},
                         {"auc_gap", std::move(gap_panel)}};
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace aucgap
