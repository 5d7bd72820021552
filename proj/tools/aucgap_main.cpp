#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aucgap/config.hpp"
#include "aucgap/csv.hpp"
#include "aucgap/errors.hpp"
#include "aucgap/pipeline.hpp"
#include "aucgap/report.hpp"
#include "aucgap/synthetic.hpp"
#include "aucgap/version.hpp"

namespace {

using namespace aucgap;

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw IoError("cannot open \"" + path + "\" for writing");
    }
    stream << content;
    if (!stream) {
        throw IoError("error while writing \"" + path + "\"");
    }
}

std::string format_double(double value) {
    char buffer[32];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end) {
        throw ConfigError("bad " + what + " \"" + text +
                          "\" (expected a non-negative integer)");
    }
    return value;
}

GroupRecipe parse_recipe(const std::string& text) {
    std::vector<std::size_t> colons;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ':') {
            colons.push_back(i);
        }
    }
    const std::string usage =
        "bad --group \"" + text + "\" (expected name:n_pos:n_neg:d_prime)";
    if (colons.size() < 3) {
        throw ConfigError(usage);
    }
    const std::size_t c1 = colons[colons.size() - 3];
    const std::size_t c2 = colons[colons.size() - 2];
    const std::size_t c3 = colons[colons.size() - 1];

    GroupRecipe recipe;
    recipe.group = text.substr(0, c1);
    if (recipe.group.empty()) {
        throw ConfigError(usage);
    }
    recipe.n_pos =
        parse_count(text.substr(c1 + 1, c2 - c1 - 1), "--group n_pos");
    recipe.n_neg =
        parse_count(text.substr(c2 + 1, c3 - c2 - 1), "--group n_neg");

    const std::string d_prime_text = text.substr(c3 + 1);
    const char* begin = d_prime_text.data();
    const char* end = begin + d_prime_text.size();
    const auto result = std::from_chars(begin, end, recipe.d_prime);
    if (result.ec != std::errc() || result.ptr != end) {
        throw ConfigError("bad --group d_prime \"" + d_prime_text + "\"");
    }
    return recipe;
}

std::vector<std::string> split_attributes(const std::string& joined) {
    std::vector<std::string> attributes;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = joined.find(',', start);
        const std::string part = joined.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        if (part.empty()) {
            throw ConfigError("empty attribute name in --intersect \"" +
                              joined + "\"");
        }
        attributes.push_back(part);
        if (comma == std::string::npos) {
            return attributes;
        }
        start = comma + 1;
    }
}

struct AuditFlags {
    std::string input;
    std::string config_path;
    std::string task;
    double threshold = 0.0;
    std::vector<std::string> group_by;
    std::vector<std::string> intersect;
    std::string fold_column;
    std::size_t min_pos = 0;
    std::size_t min_neg = 0;
    bool bootstrap = false;
    std::size_t resamples = 0;
    std::uint64_t seed = 0;
    std::string report_out;
    std::string plot_out;
    bool allow_missing = false;
};

int run_audit_command(const AuditFlags& flags, const CLI::App& cmd) {
    AuditConfig config;
    if (cmd.count("--config") > 0) {
        config = load_config_file(flags.config_path);
    }
    if (cmd.count("--input") > 0) {
        config.input = flags.input;
    }
    if (cmd.count("--task") > 0) {
        config.task = parse_task(flags.task);
    }
    if (cmd.count("--threshold") > 0) {
        config.threshold = flags.threshold;
    }
    if (cmd.count("--group-by") > 0) {
        config.group_by = flags.group_by;
    }
    if (cmd.count("--intersect") > 0) {
        config.intersect.clear();
        for (const std::string& joined : flags.intersect) {
            config.intersect.push_back(split_attributes(joined));
        }
    }
    if (cmd.count("--fold-column") > 0) {
        config.fold_column = flags.fold_column;
    }
    if (cmd.count("--min-pos") > 0) {
        config.min_pos = flags.min_pos;
    }
    if (cmd.count("--min-neg") > 0) {
        config.min_neg = flags.min_neg;
    }
    if (cmd.count("--bootstrap") > 0) {
        config.bootstrap.enabled = true;
    }
    if (cmd.count("--resamples") > 0) {
        config.bootstrap.n_resamples = flags.resamples;
    }
    if (cmd.count("--seed") > 0) {
        config.bootstrap.seed = flags.seed;
    }
    if (cmd.count("--report-out") > 0) {
        config.report_out = flags.report_out;
    }
    if (cmd.count("--plot-out") > 0) {
        config.plot_out = flags.plot_out;
    }
    if (cmd.count("--allow-missing") > 0) {
        config.allow_missing = true;
    }

    const GapReport report = run_audit(config);
    std::cout << render_table(report);

    const nlohmann::json report_json = report_to_json(report);
    if (!config.report_out.empty()) {
        write_text_file(config.report_out, dump_json(report_json));
    }
    if (!config.plot_out.empty()) {
        write_text_file(config.plot_out,
                        dump_json(plot_data_from_reports({report_json})));
    }
    return 0;
}

int run_synth_command(const std::string& out, std::uint64_t seed,
                      const std::vector<std::string>& group_args) {
    std::vector<GroupRecipe> recipes;
    recipes.reserve(group_args.size());
    for (const std::string& text : group_args) {
        recipes.push_back(parse_recipe(text));
    }

    std::vector<EvaluationRecord> records;
    try {
        records = generate_binormal(recipes, seed);
    } catch (const std::invalid_argument& e) {
        // Recipe bounds (counts >= 1, d_prime >= 0) are CLI input problems.
        throw ConfigError(e.what());
    }

    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const EvaluationRecord& record : records) {
        rows.push_back(
            {format_double(record.score),
             record.label == BinaryLabel::positive ? "1" : "0",
             record.attributes.at("group")});
    }
    write_csv_file(out, {"score", "label", "group"}, rows);
    return 0;
}

int run_plot_data_command(const std::vector<std::string>& report_paths,
                          const std::string& out) {
    std::vector<nlohmann::json> reports;
    reports.reserve(report_paths.size());
    for (const std::string& path : report_paths) {
        std::ifstream stream(path, std::ios::binary);
        if (!stream) {
            throw IoError("cannot open \"" + path + "\" for reading");
        }
        try {
            reports.push_back(nlohmann::json::parse(stream));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(1, "",
                             "\"" + path + "\" is not valid JSON: " + e.what());
        }
    }
    write_text_file(out, dump_json(plot_data_from_reports(reports)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AUC Gap auditor: per-subgroup AUC and worst-case AUC "
                 "disparity reports from prediction CSVs"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    AuditFlags audit_flags;
    CLI::App* audit = app.add_subcommand(
        "audit", "Audit a prediction file for subgroup AUC gaps");
    audit->add_option("--input", audit_flags.input, "Prediction CSV file");
    audit->add_option("--config", audit_flags.config_path,
                      "JSON config file (flags override its keys)");
    audit->add_option("--task", audit_flags.task,
                      "Task: binary, multiclass, or real-threshold");
    audit->add_option("--threshold", audit_flags.threshold,
                      "Cut point for the real-threshold task");
    audit->add_option("--group-by", audit_flags.group_by,
                      "Attribute column to group by (repeatable)");
    audit->add_option("--intersect", audit_flags.intersect,
                      "Comma-joined attributes to intersect (repeatable)");
    audit->add_option("--fold-column", audit_flags.fold_column,
                      "Column holding test-fold ids");
    audit->add_option("--min-pos", audit_flags.min_pos,
                      "Minimum positives for a group to be audited");
    audit->add_option("--min-neg", audit_flags.min_neg,
                      "Minimum negatives for a group to be audited");
    audit->add_flag("--bootstrap", audit_flags.bootstrap,
                    "Compute a 95% bootstrap interval for the gap");
    audit->add_option("--resamples", audit_flags.resamples,
                      "Bootstrap resample count (>= 100)");
    audit->add_option("--seed", audit_flags.seed, "Bootstrap seed");
    audit->add_option("--report-out", audit_flags.report_out,
                      "Write the JSON report here");
    audit->add_option("--plot-out", audit_flags.plot_out,
                      "Write single-model plot data here");
    audit->add_flag("--allow-missing", audit_flags.allow_missing,
                    "Audit rows with blank attribute cells as \"(missing)\"");

    std::string synth_out;
    std::uint64_t synth_seed = 0;
    std::vector<std::string> synth_groups;
    CLI::App* synth = app.add_subcommand(
        "synth", "Generate a synthetic binormal prediction CSV");
    synth->add_option("--out", synth_out, "Output CSV path")->required();
    synth->add_option("--seed", synth_seed, "Generator seed");
    synth
        ->add_option("--group", synth_groups,
                     "Group recipe name:n_pos:n_neg:d_prime (repeatable)")
        ->required();

    std::vector<std::string> plot_reports;
    std::string plot_out;
    CLI::App* plot = app.add_subcommand(
        "plot-data", "Merge JSON reports into three-panel plot data");
    plot->add_option("reports", plot_reports, "Report JSON files")->required();
    plot->add_option("--out", plot_out, "Output plot-data path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (audit->parsed()) {
            return run_audit_command(audit_flags, *audit);
        }
        if (synth->parsed()) {
            return run_synth_command(synth_out, synth_seed, synth_groups);
        }
        if (plot->parsed()) {
            return run_plot_data_command(plot_reports, plot_out);
        }
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateDataError& e) {
        std::cerr << "degenerate data: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
