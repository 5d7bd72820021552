#include "aucgap/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "aucgap/errors.hpp"

namespace aucgap {

std::string to_string(TaskKind task) {
    switch (task) {
    case TaskKind::binary:
        return "binary";
    case TaskKind::multiclass:
        return "multiclass";
    case TaskKind::real_threshold:
        return "real-threshold";
    }
    throw std::invalid_argument("unreachable task kind");
}

TaskKind parse_task(const std::string& name) {
    if (name == "binary") {
        return TaskKind::binary;
    }
    if (name == "multiclass") {
        return TaskKind::multiclass;
    }
    if (name == "real-threshold") {
        return TaskKind::real_threshold;
    }
    throw ConfigError("unknown task \"" + name +
                      "\" (expected binary, multiclass, or real-threshold)");
}

namespace {

using nlohmann::json;

std::string expect_string(const json& value, const std::string& key) {
    if (!value.is_string()) {
        throw ConfigError("config key \"" + key + "\": expected a string");
    }
    return value.get<std::string>();
}

bool expect_bool(const json& value, const std::string& key) {
    if (!value.is_boolean()) {
        throw ConfigError("config key \"" + key + "\": expected a boolean");
    }
    return value.get<bool>();
}

std::uint64_t expect_uint(const json& value, const std::string& key) {
    if (!value.is_number_unsigned()) {
        throw ConfigError("config key \"" + key +
                          "\": expected a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

double expect_number(const json& value, const std::string& key) {
    if (!value.is_number()) {
        throw ConfigError("config key \"" + key + "\": expected a number");
    }
    const double number = value.get<double>();
    if (!std::isfinite(number)) {
        throw ConfigError("config key \"" + key + "\": expected a finite number");
    }
    return number;
}

std::vector<std::string> expect_string_list(const json& value,
                                            const std::string& key) {
    if (!value.is_array()) {
        throw ConfigError("config key \"" + key +
                          "\": expected an array of strings");
    }
    std::vector<std::string> out;
    out.reserve(value.size());
    for (const json& item : value) {
        out.push_back(expect_string(item, key));
    }
    return out;
}

} // namespace

AuditConfig config_from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }

    AuditConfig config;
    for (const auto& [key, value] : j.items()) {
        if (key == "input") {
            config.input = expect_string(value, key);
        } else if (key == "model") {
            config.model = expect_string(value, key);
        } else if (key == "task") {
            config.task = parse_task(expect_string(value, key));
        } else if (key == "score_column") {
            config.score_column = expect_string(value, key);
        } else if (key == "score_columns") {
            if (!value.is_object()) {
                throw ConfigError(
                    "config key \"score_columns\": expected an object mapping "
                    "class names to column names");
            }
            for (const auto& [class_name, column] : value.items()) {
                config.score_columns.emplace(class_name,
                                             expect_string(column, key));
            }
        } else if (key == "label_column") {
            config.label_column = expect_string(value, key);
        } else if (key == "positive_label") {
            config.positive_label = expect_string(value, key);
        } else if (key == "negative_label") {
            config.negative_label = expect_string(value, key);
        } else if (key == "threshold") {
            config.threshold = expect_number(value, key);
        } else if (key == "attributes") {
            config.attributes = expect_string_list(value, key);
        } else if (key == "group_by") {
            config.group_by = expect_string_list(value, key);
        } else if (key == "intersect") {
            if (!value.is_array()) {
                throw ConfigError("config key \"intersect\": expected an array "
                                  "of attribute-name arrays");
            }
            for (const json& entry : value) {
                config.intersect.push_back(expect_string_list(entry, key));
            }
        } else if (key == "explicit_groups") {
            if (!value.is_array()) {
                throw ConfigError("config key \"explicit_groups\": expected an "
                                  "array of {name, where} objects");
            }
            for (const json& entry : value) {
                if (!entry.is_object()) {
                    throw ConfigError("config key \"explicit_groups\": each "
                                      "entry must be an object");
                }
                ExplicitGroupConfig group;
                for (const auto& [field, field_value] : entry.items()) {
                    if (field == "name") {
                        group.name = expect_string(field_value, "explicit_groups.name");
                    } else if (field == "where") {
                        if (!field_value.is_object()) {
                            throw ConfigError(
                                "config key \"explicit_groups.where\": expected "
                                "an object mapping attributes to values");
                        }
                        for (const auto& [attr, attr_value] :
                             field_value.items()) {
                            group.where.emplace(
                                attr,
                                expect_string(attr_value,
                                              "explicit_groups.where"));
                        }
                    } else {
                        throw ConfigError(
                            "unknown key \"" + field +
                            "\" in an explicit_groups entry (expected name, "
                            "where)");
                    }
                }
                if (group.name.empty()) {
                    throw ConfigError(
                        "explicit_groups entries need a non-empty \"name\"");
                }
                config.explicit_groups.push_back(std::move(group));
            }
        } else if (key == "class_filter") {
            config.class_filter = expect_string_list(value, key);
        } else if (key == "fold_column") {
            config.fold_column = expect_string(value, key);
        } else if (key == "min_pos") {
            config.min_pos = static_cast<std::size_t>(expect_uint(value, key));
        } else if (key == "min_neg") {
            config.min_neg = static_cast<std::size_t>(expect_uint(value, key));
        } else if (key == "bootstrap") {
            if (!value.is_object()) {
                throw ConfigError("config key \"bootstrap\": expected an "
                                  "object {enabled, n_resamples, seed}");
            }
            for (const auto& [field, field_value] : value.items()) {
                if (field == "enabled") {
                    config.bootstrap.enabled =
                        expect_bool(field_value, "bootstrap.enabled");
                } else if (field == "n_resamples") {
                    config.bootstrap.n_resamples = static_cast<std::size_t>(
                        expect_uint(field_value, "bootstrap.n_resamples"));
                } else if (field == "seed") {
                    config.bootstrap.seed =
                        expect_uint(field_value, "bootstrap.seed");
                } else {
                    throw ConfigError("unknown key \"" + field +
                                      "\" in bootstrap (expected enabled, "
                                      "n_resamples, seed)");
                }
            }
        } else if (key == "report_out") {
            config.report_out = expect_string(value, key);
        } else if (key == "plot_out") {
            config.plot_out = expect_string(value, key);
        } else if (key == "allow_missing") {
            config.allow_missing = expect_bool(value, key);
        } else {
            throw ConfigError("unknown config key \"" + key + "\"");
        }
    }
    return config;
}

AuditConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw IoError("cannot open config \"" + path.string() +
                      "\" for reading");
    }
    json parsed;
    try {
        parsed = json::parse(stream);
    } catch (const json::parse_error& e) {
        throw ConfigError("config \"" + path.string() +
                          "\" is not valid JSON: " + e.what());
    }
    return config_from_json(parsed);
}

nlohmann::json config_to_json(const AuditConfig& config) {
    json j;
    j["input"] = config.input;
    j["model"] = config.model;
    j["task"] = to_string(config.task);
    j["score_column"] = config.score_column;
    if (!config.score_columns.empty()) {
        j["score_columns"] = config.score_columns;
    }
    j["label_column"] = config.label_column;
    j["positive_label"] = config.positive_label;
    if (config.negative_label) {
        j["negative_label"] = *config.negative_label;
    }
    if (config.threshold) {
        j["threshold"] = *config.threshold;
    }
    j["attributes"] = config.attributes;
    j["group_by"] = config.group_by;
    j["intersect"] = config.intersect;
    json explicit_groups = json::array();
    for (const ExplicitGroupConfig& group : config.explicit_groups) {
        explicit_groups.push_back(
            json{{"name", group.name}, {"where", group.where}});
    }
    j["explicit_groups"] = std::move(explicit_groups);
    if (!config.class_filter.empty()) {
        j["class_filter"] = config.class_filter;
    }
    if (config.fold_column) {
        j["fold_column"] = *config.fold_column;
    }
    j["min_pos"] = config.min_pos;
    j["min_neg"] = config.min_neg;
    j["bootstrap"] = json{{"enabled", config.bootstrap.enabled},
                          {"n_resamples", config.bootstrap.n_resamples},
                          {"seed", config.bootstrap.seed}};
    j["allow_missing"] = config.allow_missing;
    return j;
}

void validate_config(const AuditConfig& config) {
    if (config.input.empty()) {
        throw ConfigError("no input file specified (set \"input\" in the "
                          "config or pass --input)");
    }
    if (config.min_pos < 1 || config.min_neg < 1) {
        throw ConfigError("min_pos and min_neg must be at least 1");
    }

    switch (config.task) {
    case TaskKind::binary:
        break;
    case TaskKind::multiclass:
        if (config.score_columns.size() < 2) {
            throw ConfigError("multiclass task requires \"score_columns\" "
                              "with at least 2 classes");
        }
        break;
    case TaskKind::real_threshold:
        if (!config.threshold) {
            throw ConfigError("real-threshold task requires \"threshold\"");
        }
        break;
    }
    if (config.task != TaskKind::real_threshold && config.threshold) {
        throw ConfigError(
            "\"threshold\" is only meaningful for the real-threshold task");
    }
    if (config.task != TaskKind::multiclass) {
        if (!config.score_columns.empty()) {
            throw ConfigError(
                "\"score_columns\" is only meaningful for the multiclass task");
        }
        if (!config.class_filter.empty()) {
            throw ConfigError(
                "\"class_filter\" is only meaningful for the multiclass task");
        }
    }

    if (config.negative_label &&
        *config.negative_label == config.positive_label) {
        throw ConfigError("positive_label and negative_label must differ");
    }

    if (config.group_by.empty() && config.intersect.empty() &&
        config.explicit_groups.empty()) {
        throw ConfigError("no group specifications (set group_by, intersect, "
                          "or explicit_groups)");
    }
    for (const std::string& attribute : config.group_by) {
        if (attribute.empty()) {
            throw ConfigError("group_by entries must be non-empty");
        }
    }
    for (const std::vector<std::string>& attributes : config.intersect) {
        if (attributes.size() < 2) {
            throw ConfigError(
                "each intersect entry needs at least 2 attributes");
        }
        for (const std::string& attribute : attributes) {
            if (attribute.empty()) {
                throw ConfigError("intersect attributes must be non-empty");
            }
        }
    }

    if (config.bootstrap.enabled && config.bootstrap.n_resamples < 100) {
        throw ConfigError("bootstrap.n_resamples must be at least 100");
    }
}

std::vector<std::string> attribute_columns(const AuditConfig& config) {
    std::set<std::string> columns(config.attributes.begin(),
                                  config.attributes.end());
    columns.insert(config.group_by.begin(), config.group_by.end());
    for (const std::vector<std::string>& attributes : config.intersect) {
        columns.insert(attributes.begin(), attributes.end());
    }
    for (const ExplicitGroupConfig& group : config.explicit_groups) {
        for (const auto& [attribute, value] : group.where) {
            columns.insert(attribute);
        }
    }
    return {columns.begin(), columns.end()};
}

std::vector<GroupSpec> group_specs(const AuditConfig& config) {
    std::vector<GroupSpec> specs;
    specs.reserve(config.group_by.size() + config.intersect.size() +
                  config.explicit_groups.size());
    for (const std::string& attribute : config.group_by) {
        specs.push_back(SingleAttributeSpec{attribute});
    }
    for (const std::vector<std::string>& attributes : config.intersect) {
        specs.push_back(IntersectionSpec{attributes});
    }
    for (const ExplicitGroupConfig& group : config.explicit_groups) {
        specs.push_back(ExplicitSpec{group.name, group.where});
    }
    return specs;
}

} // namespace aucgap
