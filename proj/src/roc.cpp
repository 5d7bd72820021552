#include "aucgap/roc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "aucgap/errors.hpp"

namespace aucgap {

namespace {

struct ClassCounts {
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

// Shared precondition checks. Never drops records: a non-finite score is a
// hard error because silent dropping would change group sizes invisibly.
ClassCounts check_inputs(std::span<const double> scores,
                         std::span<const BinaryLabel> labels) {
    if (scores.size() != labels.size()) {
        throw std::invalid_argument(
            "scores and labels differ in length (" +
            std::to_string(scores.size()) + " vs " +
            std::to_string(labels.size()) + ")");
    }
    ClassCounts counts;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!std::isfinite(scores[i])) {
            throw std::invalid_argument("non-finite score at index " +
                                        std::to_string(i));
        }
        if (labels[i] == BinaryLabel::positive) {
            ++counts.n_pos;
        } else {
            ++counts.n_neg;
        }
    }
    if (counts.n_pos == 0) {
        throw DegenerateDataError("AUC undefined: no positive labels");
    }
    if (counts.n_neg == 0) {
        throw DegenerateDataError("AUC undefined: no negative labels");
    }
    return counts;
}

// Indices sorted by score with the input index as secondary key, so the
// ordering (and every downstream artifact) is bit-reproducible.
std::vector<std::size_t> sorted_indices(std::span<const double> scores,
                                        bool descending) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) {
                  if (scores[a] != scores[b]) {
                      return descending ? scores[a] > scores[b]
                                        : scores[a] < scores[b];
                  }
                  return a < b;
              });
    return order;
}

} // namespace

RocCurve roc_curve(std::span<const double> scores,
                   std::span<const BinaryLabel> labels) {
    const ClassCounts counts = check_inputs(scores, labels);
    const auto order = sorted_indices(scores, /*descending=*/true);

    RocCurve curve;
    curve.n_pos = counts.n_pos;
    curve.n_neg = counts.n_neg;
    curve.points.push_back(
        {0.0, 0.0, std::numeric_limits<double>::infinity()});

    const double pos_total = static_cast<double>(counts.n_pos);
    const double neg_total = static_cast<double>(counts.n_neg);
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        const double threshold = scores[order[i]];
        // Consume the whole tie block: lowering the threshold to this score
        // admits every record sharing it at once.
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == threshold) {
            if (labels[order[j]] == BinaryLabel::positive) {
                ++tp;
            } else {
                ++fp;
            }
            ++j;
        }
        curve.points.push_back({static_cast<double>(fp) / neg_total,
                                static_cast<double>(tp) / pos_total,
                                threshold});
        i = j;
    }
    return curve;
}

AucValue auc_trapezoid(const RocCurve& curve) {
    if (curve.points.size() < 2) {
        throw std::invalid_argument("ROC curve has fewer than 2 points");
    }
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
        const RocPoint& a = curve.points[i];
        const RocPoint& b = curve.points[i + 1];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
    }
    return {area, curve.n_pos, curve.n_neg};
}

AucValue auc_rank(std::span<const double> scores,
                  std::span<const BinaryLabel> labels) {
    const ClassCounts counts = check_inputs(scores, labels);
    const auto order = sorted_indices(scores, /*descending=*/false);

    // Midrank sum over positives: tied observations share the average of
    // the 1-based ranks they span, which credits tied pos/neg pairs 0.5.
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) {
            ++j;
        }
        const double midrank = static_cast<double>(i + j + 1) / 2.0;
        for (std::size_t k = i; k < j; ++k) {
            if (labels[order[k]] == BinaryLabel::positive) {
                rank_sum_pos += midrank;
            }
        }
        i = j;
    }

    const double n_pos = static_cast<double>(counts.n_pos);
    const double n_neg = static_cast<double>(counts.n_neg);
    const double u_stat = rank_sum_pos - n_pos * (n_pos + 1.0) / 2.0;
    return {u_stat / (n_pos * n_neg), counts.n_pos, counts.n_neg};
}

} // namespace aucgap
