#include "aucgap/gap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aucgap/errors.hpp"
#include "aucgap/rng.hpp"

namespace aucgap {

namespace {

// Record view used by the AUC computations: score, class, interned fold
// index (-1 when the dataset has no folds).
struct Obs {
    double score;
    BinaryLabel label;
    std::int32_t fold;
};

struct FoldedAuc {
    std::optional<AucValue> auc;
    std::string reason;
    std::vector<std::optional<AucValue>> per_fold; // indexed by fold id
};

AucValue plain_auc(const std::vector<Obs>& obs) {
    std::vector<double> scores;
    std::vector<BinaryLabel> labels;
    scores.reserve(obs.size());
    labels.reserve(obs.size());
    for (const Obs& o : obs) {
        scores.push_back(o.score);
        labels.push_back(o.label);
    }
    return auc_rank(scores, labels);
}

// Fold-averaging rule shared by point estimates and bootstrap resamples:
// with folds, the subset AUC is the unweighted mean over folds that contain
// both classes; with no usable fold the AUC is undefined.
FoldedAuc folded_auc(const std::vector<Obs>& obs, std::size_t n_folds) {
    FoldedAuc out;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    for (const Obs& o : obs) {
        (o.label == BinaryLabel::positive ? n_pos : n_neg)++;
    }
    if (n_pos == 0) {
        out.reason = "no-positives";
        return out;
    }
    if (n_neg == 0) {
        out.reason = "no-negatives";
        return out;
    }

    if (n_folds == 0) {
        out.auc = plain_auc(obs);
        return out;
    }

    std::vector<std::vector<Obs>> buckets(n_folds);
    for (const Obs& o : obs) {
        buckets[static_cast<std::size_t>(o.fold)].push_back(o);
    }
    out.per_fold.resize(n_folds);
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t f = 0; f < n_folds; ++f) {
        const bool has_pos = std::any_of(
            buckets[f].begin(), buckets[f].end(),
            [](const Obs& o) { return o.label == BinaryLabel::positive; });
        const bool has_neg = std::any_of(
            buckets[f].begin(), buckets[f].end(),
            [](const Obs& o) { return o.label == BinaryLabel::negative; });
        if (!has_pos || !has_neg) {
            continue;
        }
        const AucValue value = plain_auc(buckets[f]);
        out.per_fold[f] = value;
        sum += value.value;
        ++used;
    }
    if (used == 0) {
        out.reason = "no-fold-with-both-classes";
        return out;
    }
    out.auc = AucValue{sum / static_cast<double>(used), n_pos, n_neg};
    return out;
}

// Interns the fold ids of a member set in sorted order. Returns the names;
// fills obs with interned indices. Throws if members mix fold-tagged and
// untagged records.
std::vector<std::string> build_obs(std::span<const EvaluationRecord> records,
                                   std::span<const std::size_t> members,
                                   std::vector<Obs>& obs) {
    std::map<std::string, std::int32_t> interned;
    bool any_fold = false;
    bool any_plain = false;
    for (const std::size_t index : members) {
        if (index >= records.size()) {
            throw std::invalid_argument("member index " +
                                        std::to_string(index) +
                                        " beyond the record sequence");
        }
        const auto& fold = records[index].fold_id;
        (fold.has_value() ? any_fold : any_plain) = true;
        if (fold) {
            interned.emplace(*fold, 0);
        }
    }
    if (any_fold && any_plain) {
        throw std::invalid_argument(
            "records mix fold-tagged and untagged entries");
    }

    std::vector<std::string> names;
    names.reserve(interned.size());
    for (auto& [name, id] : interned) {
        id = static_cast<std::int32_t>(names.size());
        names.push_back(name);
    }

    obs.clear();
    obs.reserve(members.size());
    for (const std::size_t index : members) {
        const EvaluationRecord& r = records[index];
        obs.push_back({r.score, r.label,
                       r.fold_id ? interned[*r.fold_id] : -1});
    }
    return names;
}

} // namespace

GroupAucResult records_auc(std::span<const EvaluationRecord> records,
                           std::span<const std::size_t> members) {
    std::vector<Obs> obs;
    const std::vector<std::string> fold_names =
        build_obs(records, members, obs);

    const FoldedAuc folded = folded_auc(obs, fold_names.size());
    GroupAucResult result;
    result.auc = folded.auc;
    result.undefined_reason = folded.reason;
    for (std::size_t f = 0; f < folded.per_fold.size(); ++f) {
        if (folded.per_fold[f]) {
            result.per_fold.emplace(fold_names[f], *folded.per_fold[f]);
        }
    }
    return result;
}

SubgroupAucTable subgroup_aucs(std::span<const EvaluationRecord> records,
                               const GroupAssignment& assignment,
                               std::span<const GroupValidity> validity) {
    std::map<std::string, const GroupValidity*> by_name;
    for (const GroupValidity& v : validity) {
        by_name.emplace(v.group, &v);
    }

    SubgroupAucTable table;
    for (const auto& [name, members] : assignment.groups) {
        const auto it = by_name.find(name);
        if (it == by_name.end()) {
            throw std::invalid_argument("validity list does not cover group \"" +
                                        name + "\"");
        }
        SubgroupAucEntry entry;
        entry.validity = *it->second;
        if (entry.validity.valid) {
            entry.result = records_auc(records, members);
        } else {
            entry.result.undefined_reason = to_string(entry.validity.reason);
        }
        table.entries.emplace(name, std::move(entry));
    }
    return table;
}

GapValue auc_gap(const SubgroupAucTable& table) {
    GapValue gap;
    double max_value = 0.0;
    double min_value = 0.0;
    // Map order is lexicographic, so the first strict extremum seen is the
    // lexicographically smallest arg among ties.
    for (const auto& [name, entry] : table.entries) {
        if (!entry.validity.valid || !entry.result.auc) {
            continue;
        }
        const double value = entry.result.auc->value;
        if (gap.n_valid_groups == 0) {
            max_value = min_value = value;
            gap.arg_max_group = gap.arg_min_group = name;
        } else {
            if (value > max_value) {
                max_value = value;
                gap.arg_max_group = name;
            }
            if (value < min_value) {
                min_value = value;
                gap.arg_min_group = name;
            }
        }
        ++gap.n_valid_groups;
    }

    if (gap.n_valid_groups < 2) {
        gap.degenerate = true;
        gap.value = 0.0;
        return gap;
    }
    gap.value = max_value - min_value;
    return gap;
}

namespace {

double percentile(const std::vector<double>& sorted, double p) {
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace

GapInterval bootstrap_gap(std::span<const EvaluationRecord> records,
                          const GroupAssignment& assignment,
                          std::span<const GroupValidity> validity,
                          std::size_t n_resamples, std::uint64_t seed) {
    if (n_resamples < 100) {
        throw std::invalid_argument("bootstrap requires n_resamples >= 100");
    }

    std::map<std::string, bool> valid_by_name;
    for (const GroupValidity& v : validity) {
        valid_by_name.emplace(v.group, v.valid);
    }

    // Canonical per-group observation sets, value-sorted so the interval is
    // invariant to the row order of the input file.
    struct GroupObs {
        std::vector<Obs> obs;
        std::size_t n_folds;
    };
    std::vector<GroupObs> groups;
    for (const auto& [name, members] : assignment.groups) {
        const auto it = valid_by_name.find(name);
        if (it == valid_by_name.end() || !it->second) {
            continue;
        }
        GroupObs g;
        g.n_folds = build_obs(records, members, g.obs).size();
        std::sort(g.obs.begin(), g.obs.end(), [](const Obs& a, const Obs& b) {
            if (a.score != b.score) return a.score < b.score;
            if (a.label != b.label) return a.label < b.label;
            return a.fold < b.fold;
        });
        groups.push_back(std::move(g));
    }
    if (groups.size() < 2) {
        throw DegenerateDataError(
            "bootstrap requires at least 2 valid groups");
    }

    GapInterval interval;
    interval.n_resamples = n_resamples;
    interval.seed = seed;

    std::vector<double> gaps;
    gaps.reserve(n_resamples);
    std::vector<Obs> drawn;
    for (std::size_t r = 0; r < n_resamples; ++r) {
        const std::uint64_t resample_stream = rng::derive(seed, r);
        double max_auc = 0.0;
        double min_auc = 0.0;
        bool degenerate = false;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const std::uint64_t stream = rng::derive(resample_stream, g);
            const std::vector<Obs>& pool = groups[g].obs;
            drawn.clear();
            drawn.reserve(pool.size());
            for (std::size_t j = 0; j < pool.size(); ++j) {
                drawn.push_back(
                    pool[rng::bounded(rng::derive(stream, j), pool.size())]);
            }
            const FoldedAuc value = folded_auc(drawn, groups[g].n_folds);
            if (!value.auc) {
                degenerate = true;
                break;
            }
            if (g == 0) {
                max_auc = min_auc = value.auc->value;
            } else {
                max_auc = std::max(max_auc, value.auc->value);
                min_auc = std::min(min_auc, value.auc->value);
            }
        }
        if (degenerate) {
            ++interval.skipped;
        } else {
            gaps.push_back(max_auc - min_auc);
        }
    }

    if (gaps.empty()) {
        throw DegenerateDataError("all bootstrap resamples degenerate");
    }
    std::sort(gaps.begin(), gaps.end());
    interval.lower = percentile(gaps, 0.025);
    interval.upper = percentile(gaps, 0.975);
    return interval;
}

GapAnalysis analyze_gaps(std::span<const EvaluationRecord> records,
                         std::span<const GroupSpec> specs,
                         const GapOptions& options) {
    GapAnalysis analysis;

    const GroupAssignment assignment = build_groups(records, specs);
    const std::vector<GroupValidity> validity =
        validate_groups(assignment, records, options.min_pos, options.min_neg);

    std::vector<std::size_t> everyone(records.size());
    std::iota(everyone.begin(), everyone.end(), std::size_t{0});
    analysis.overall = records_auc(records, everyone);
    if (!analysis.overall.auc) {
        analysis.warnings.push_back("overall AUC undefined: " +
                                    analysis.overall.undefined_reason);
    }

    analysis.table = subgroup_aucs(records, assignment, validity);
    analysis.gap = auc_gap(analysis.table);
    if (analysis.gap.degenerate) {
        analysis.warnings.push_back(
            "fewer than 2 valid groups; AUC gap reported as 0");
    }

    if (options.bootstrap) {
        if (analysis.gap.degenerate) {
            analysis.warnings.push_back(
                "bootstrap skipped: fewer than 2 valid groups");
        } else {
            try {
                analysis.interval =
                    bootstrap_gap(records, assignment, validity,
                                  options.n_resamples, options.seed);
                if (analysis.interval->skipped > 0) {
                    analysis.warnings.push_back(
                        "bootstrap: " +
                        std::to_string(analysis.interval->skipped) + " of " +
                        std::to_string(analysis.interval->n_resamples) +
                        " resamples degenerate and skipped");
                }
            } catch (const DegenerateDataError& e) {
                analysis.warnings.push_back(std::string("bootstrap skipped: ") +
                                            e.what());
            }
        }
    }
    return analysis;
}

} // namespace aucgap
