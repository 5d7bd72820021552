#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aucgap/records.hpp"

namespace aucgap {

// One point of the empirical ROC curve. threshold is the score cutoff that
// produces this point under the decision rule score >= threshold => positive;
// the leading (0,0) point carries +infinity.
struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
    double threshold = 0.0;
};

// Canonical empirical ROC curve: starts at (0,0), ends at (1,1), one point
// per distinct score value (tied scores collapse into a single point),
// thresholds strictly decreasing after the sentinel.
struct RocCurve {
    std::vector<RocPoint> points;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

struct AucValue {
    double value = 0.0;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

// Threshold sweep over the distinct score values.
// Throws std::invalid_argument on length mismatch or non-finite scores,
// DegenerateDataError when either class is missing (AUC undefined).
RocCurve roc_curve(std::span<const double> scores,
                   std::span<const BinaryLabel> labels);

// Trapezoidal area under the curve points.
AucValue auc_trapezoid(const RocCurve& curve);

// Same quantity via the Mann-Whitney rank statistic with midranks for ties
// (tied positive/negative pairs count 0.5). O(n log n); agrees with
// auc_trapezoid(roc_curve(...)) to within 1e-12. Same errors as roc_curve.
AucValue auc_rank(std::span<const double> scores,
                  std::span<const BinaryLabel> labels);

} // namespace aucgap
