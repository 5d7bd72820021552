#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aucgap/gap.hpp"
#include "aucgap/records.hpp"

namespace aucgap {

// Binary view of a multiclass dataset for one target class: score is the
// class's own score, label is positive iff the true class matches.
// Attributes and fold ids pass through unchanged.
std::vector<EvaluationRecord> one_vs_rest(
    std::span<const MulticlassRecord> records,
    const std::string& target_class);

// Binary view of a real-valued prediction task: label is positive iff the
// true value is >= threshold; the predicted value becomes the score.
std::vector<EvaluationRecord> threshold_real(
    std::span<const RealTargetRecord> records, double threshold);

// Outcome of auditing one class during a multiclass sweep. A class whose
// one-vs-rest view cannot be audited at all (e.g. it never occurs as the
// true class) is recorded here instead of aborting the sweep.
struct ClassGapResult {
    std::optional<GapAnalysis> analysis;
    std::string error; // non-empty when the class audit could not run
};

// Runs the full grouping/AUC/gap pipeline once per class (lexicographic
// class order). When class_filter is non-empty only the listed classes are
// audited; unknown filter entries are a configuration error.
std::map<std::string, ClassGapResult> per_class_gap_sweep(
    std::span<const MulticlassRecord> records,
    std::span<const GroupSpec> specs, const GapOptions& options,
    std::span<const std::string> class_filter = {});

} // namespace aucgap
