#include "aucgap/adapters.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

#include "aucgap/errors.hpp"

namespace aucgap {

namespace {

std::string format_value(double value) {
    char buffer[32];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

} // namespace

std::vector<EvaluationRecord> one_vs_rest(
    std::span<const MulticlassRecord> records,
    const std::string& target_class) {
    if (records.empty()) {
        throw std::invalid_argument("no records to adapt");
    }

    std::vector<EvaluationRecord> out;
    out.reserve(records.size());
    std::size_t n_pos = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const MulticlassRecord& r = records[i];
        const auto score = r.class_scores.find(target_class);
        if (score == r.class_scores.end()) {
            throw ConfigError("unknown class \"" + target_class +
                              "\" (record " + std::to_string(i) +
                              " has no score for it)");
        }
        EvaluationRecord binary;
        binary.score = score->second;
        binary.label = r.true_class == target_class ? BinaryLabel::positive
                                                    : BinaryLabel::negative;
        if (binary.label == BinaryLabel::positive) {
            ++n_pos;
        }
        binary.attributes = r.attributes;
        binary.fold_id = r.fold_id;
        out.push_back(std::move(binary));
    }

    if (n_pos == 0) {
        throw DegenerateDataError("AUC undefined for class \"" + target_class +
                                  "\": no positive instances");
    }
    return out;
}

std::vector<EvaluationRecord> threshold_real(
    std::span<const RealTargetRecord> records, double threshold) {
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("threshold must be finite");
    }
    if (records.empty()) {
        throw std::invalid_argument("no records to adapt");
    }

    std::vector<EvaluationRecord> out;
    out.reserve(records.size());
    std::size_t n_pos = 0;
    for (const RealTargetRecord& r : records) {
        EvaluationRecord binary;
        binary.score = r.predicted_value;
        binary.label = r.true_value >= threshold ? BinaryLabel::positive
                                                 : BinaryLabel::negative;
        if (binary.label == BinaryLabel::positive) {
            ++n_pos;
        }
        binary.attributes = r.attributes;
        binary.fold_id = r.fold_id;
        out.push_back(std::move(binary));
    }

    if (n_pos == 0) {
        throw DegenerateDataError("degenerate labeling: threshold " +
                                  format_value(threshold) +
                                  " marks every record negative");
    }
    if (n_pos == records.size()) {
        throw DegenerateDataError("degenerate labeling: threshold " +
                                  format_value(threshold) +
                                  " marks every record positive");
    }
    return out;
}

std::map<std::string, ClassGapResult> per_class_gap_sweep(
    std::span<const MulticlassRecord> records,
    std::span<const GroupSpec> specs, const GapOptions& options,
    std::span<const std::string> class_filter) {
    if (records.empty()) {
        throw std::invalid_argument("no records to audit");
    }

    std::set<std::string> classes;
    for (const MulticlassRecord& r : records) {
        for (const auto& [name, score] : r.class_scores) {
            classes.insert(name);
        }
    }
    if (classes.size() < 2) {
        throw std::invalid_argument("multiclass audit needs at least 2 classes");
    }

    std::vector<std::string> selected;
    if (class_filter.empty()) {
        selected.assign(classes.begin(), classes.end());
    } else {
        for (const std::string& name : class_filter) {
            if (!classes.contains(name)) {
                throw ConfigError("unknown class \"" + name +
                                  "\" in class filter");
            }
        }
        for (const std::string& name : classes) {
            if (std::find(class_filter.begin(), class_filter.end(), name) !=
                class_filter.end()) {
                selected.push_back(name);
            }
        }
    }

    std::map<std::string, ClassGapResult> sweep;
    for (const std::string& name : selected) {
        ClassGapResult entry;
        try {
            const std::vector<EvaluationRecord> binary =
                one_vs_rest(records, name);
            entry.analysis = analyze_gaps(binary, specs, options);
        } catch (const DegenerateDataError& e) {
            entry.error = e.what();
        }
        sweep.emplace(name, std::move(entry));
    }
    return sweep;
}

} // namespace aucgap
