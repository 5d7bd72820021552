#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aucgap/grouping.hpp"
#include "aucgap/records.hpp"
#include "aucgap/roc.hpp"

namespace aucgap {

// AUC of one record subset. Undefined (auc empty, reason set) when the
// subset lacks a class, or in fold mode when no fold has both classes.
// With folds present the value is the unweighted mean of the per-fold AUCs
// over folds in which the subset has at least one record of each class;
// per_fold keeps the individual fold values. n_pos/n_neg in the AucValue
// always count the whole subset.
struct GroupAucResult {
    std::optional<AucValue> auc;
    std::string undefined_reason; // non-empty iff !auc
    std::map<std::string, AucValue> per_fold;
};

struct SubgroupAucEntry {
    GroupAucResult result;
    GroupValidity validity;
};

// One entry per group in the assignment, valid or not.
struct SubgroupAucTable {
    std::map<std::string, SubgroupAucEntry> entries;
};

// max - min over valid-group AUCs; equals the max over all pairs of
// absolute differences. arg groups break ties toward the lexicographically
// smallest name. With fewer than 2 participating groups the value is 0 and
// degenerate is set; callers surface a warning, never an error.
struct GapValue {
    double value = 0.0;
    std::string arg_max_group;
    std::string arg_min_group;
    std::size_t n_valid_groups = 0;
    bool degenerate = false;
};

inline constexpr const char* kBootstrapMethod = "percentile-bootstrap";

// Percentile 95% bootstrap interval for the gap.
struct GapInterval {
    double lower = 0.0;
    double upper = 0.0;
    std::size_t n_resamples = 0; // requested
    std::size_t skipped = 0;     // resamples where a group lost a class
    std::uint64_t seed = 0;
};

// AUC of one membership set under the fold-averaging rule above. Exposed
// so the overall AUC (the implicit everyone-group) uses the identical path.
GroupAucResult records_auc(std::span<const EvaluationRecord> records,
                           std::span<const std::size_t> members);

// Per-group AUCs for every group in the assignment. Excluded groups carry
// the undefined marker with their exclusion reason; per-group failures are
// encoded, never thrown, so one degenerate slice cannot abort the table.
SubgroupAucTable subgroup_aucs(std::span<const EvaluationRecord> records,
                               const GroupAssignment& assignment,
                               std::span<const GroupValidity> validity);

GapValue auc_gap(const SubgroupAucTable& table);

// Stratified bootstrap: each valid group is resampled with replacement
// within itself, preserving its size, and the gap recomputed per resample.
// Resamples where any participating group's AUC becomes undefined are
// skipped and counted. Deterministic given the seed and invariant to input
// row order. Requires n_resamples >= 100 and >= 2 valid groups; throws
// DegenerateDataError if every resample degenerates.
GapInterval bootstrap_gap(std::span<const EvaluationRecord> records,
                          const GroupAssignment& assignment,
                          std::span<const GroupValidity> validity,
                          std::size_t n_resamples, std::uint64_t seed);

struct GapOptions {
    std::size_t min_pos = 1;
    std::size_t min_neg = 1;
    bool bootstrap = false;
    std::size_t n_resamples = 1000;
    std::uint64_t seed = 0;
};

// Full per-dataset result: overall AUC, subgroup table, gap, optional
// bootstrap interval, and accumulated warnings.
struct GapAnalysis {
    GroupAucResult overall;
    SubgroupAucTable table;
    GapValue gap;
    std::optional<GapInterval> interval;
    std::vector<std::string> warnings;
};

// Convenience pipeline: build groups, validate, compute the table, the gap
// and (optionally) the bootstrap interval. Degenerate situations become
// warnings on the result, not errors.
GapAnalysis analyze_gaps(std::span<const EvaluationRecord> records,
                         std::span<const GroupSpec> specs,
                         const GapOptions& options);

} // namespace aucgap
