#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "aucgap/errors.hpp"
#include "aucgap/roc.hpp"
#include "support.hpp"

using namespace aucgap;
using testsupport::pairwise_auc;
using testsupport::random_instance;

namespace {
constexpr BinaryLabel P = BinaryLabel::positive;
constexpr BinaryLabel N = BinaryLabel::negative;
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST_CASE("worked example: scores .1/.4/.35/.8 give AUC 0.75") {
    const std::vector<double> scores = {0.1, 0.4, 0.35, 0.8};
    const std::vector<BinaryLabel> labels = {N, N, P, P};

    const AucValue rank = auc_rank(scores, labels);
    CHECK(rank.value == 0.75);
    CHECK(rank.n_pos == 2);
    CHECK(rank.n_neg == 2);

    const RocCurve curve = roc_curve(scores, labels);
    const AucValue trapezoid = auc_trapezoid(curve);
    CHECK(trapezoid.value == 0.75);
    CHECK(pairwise_auc(scores, labels) == 0.75);

    REQUIRE(curve.points.size() == 5);
    CHECK(curve.points[0].fpr == 0.0);
    CHECK(curve.points[0].tpr == 0.0);
    CHECK(curve.points[0].threshold == kInf);
    CHECK(curve.points[1].threshold == 0.8);
    CHECK(curve.points[1].tpr == 0.5);
    CHECK(curve.points[1].fpr == 0.0);
    CHECK(curve.points[2].threshold == 0.4);
    CHECK(curve.points[2].tpr == 0.5);
    CHECK(curve.points[2].fpr == 0.5);
    CHECK(curve.points[3].threshold == 0.35);
    CHECK(curve.points[3].tpr == 1.0);
    CHECK(curve.points[3].fpr == 0.5);
    CHECK(curve.points[4].threshold == 0.1);
    CHECK(curve.points[4].tpr == 1.0);
    CHECK(curve.points[4].fpr == 1.0);
}

TEST_CASE("perfect separation collapses to three curve points") {
    const std::vector<double> scores = {0.9, 0.1};
    const std::vector<BinaryLabel> labels = {P, N};
    const RocCurve curve = roc_curve(scores, labels);
    REQUIRE(curve.points.size() == 3);
    CHECK(curve.points[0].threshold == kInf);
    CHECK(curve.points[1].fpr == 0.0);
    CHECK(curve.points[1].tpr == 1.0);
    CHECK(curve.points[1].threshold == 0.9);
    CHECK(curve.points[2].fpr == 1.0);
    CHECK(curve.points[2].tpr == 1.0);
    CHECK(curve.points[2].threshold == 0.1);
    CHECK(auc_trapezoid(curve).value == 1.0);
    CHECK(auc_rank(scores, labels).value == 1.0);
}

TEST_CASE("all scores tied yields the diagonal and AUC exactly 0.5") {
    const std::vector<double> scores = {0.5, 0.5, 0.5, 0.5, 0.5};
    const std::vector<BinaryLabel> labels = {P, N, P, N, N};
    const RocCurve curve = roc_curve(scores, labels);
    REQUIRE(curve.points.size() == 2);
    CHECK(curve.points[0].fpr == 0.0);
    CHECK(curve.points[0].tpr == 0.0);
    CHECK(curve.points[1].fpr == 1.0);
    CHECK(curve.points[1].tpr == 1.0);
    CHECK(curve.points[1].threshold == 0.5);
    CHECK(auc_trapezoid(curve).value == 0.5);
    CHECK(auc_rank(scores, labels).value == 0.5);
}

TEST_CASE("tied positive/negative pairs earn exactly half credit") {
    // Two positives at 0.5 against negatives at 0.2, 0.5, 0.9:
    // per positive 1 + 0.5 + 0 = 1.5 wins, U = 3 of 6 pairs.
    const std::vector<double> scores = {0.2, 0.5, 0.5, 0.5, 0.9};
    const std::vector<BinaryLabel> labels = {N, P, P, N, N};
    CHECK(auc_rank(scores, labels).value == 0.5);
    CHECK(auc_trapezoid(roc_curve(scores, labels)).value == 0.5);
    CHECK(pairwise_auc(scores, labels) == 0.5);
}

TEST_CASE("rank and trapezoid routes agree to 1e-12 under heavy ties") {
    std::mt19937_64 rng(20260825);
    std::uniform_int_distribution<std::size_t> pick_n(2, 300);
    for (const double tie_rate : {0.0, 0.3, 0.9}) {
        for (int i = 0; i < 50; ++i) {
            const auto instance =
                random_instance(rng, pick_n(rng), tie_rate);
            const double rank =
                auc_rank(instance.scores, instance.labels).value;
            const double trapezoid =
                auc_trapezoid(roc_curve(instance.scores, instance.labels))
                    .value;
            REQUIRE(std::abs(rank - trapezoid) <= 1e-12);
            REQUIRE(std::abs(rank - pairwise_auc(instance.scores,
                                                 instance.labels)) <= 1e-12);
        }
    }
}

TEST_CASE("label inversion complements the AUC") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 50; ++i) {
        const auto instance = random_instance(rng, 120, 0.3);
        std::vector<BinaryLabel> inverted;
        inverted.reserve(instance.labels.size());
        for (const BinaryLabel label : instance.labels) {
            inverted.push_back(label == P ? N : P);
        }
        const double auc = auc_rank(instance.scores, instance.labels).value;
        const double flipped = auc_rank(instance.scores, inverted).value;
        REQUIRE(std::abs(flipped - (1.0 - auc)) <= 1e-12);
    }
}

TEST_CASE("curve invariants hold on random instances") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 30; ++i) {
        const auto instance = random_instance(rng, 200, 0.5);
        const RocCurve curve = roc_curve(instance.scores, instance.labels);
        REQUIRE(curve.points.size() >= 2);
        CHECK(curve.points.front().fpr == 0.0);
        CHECK(curve.points.front().tpr == 0.0);
        CHECK(curve.points.back().fpr == 1.0);
        CHECK(curve.points.back().tpr == 1.0);
        for (std::size_t k = 1; k < curve.points.size(); ++k) {
            CHECK(curve.points[k].fpr >= curve.points[k - 1].fpr);
            CHECK(curve.points[k].tpr >= curve.points[k - 1].tpr);
            CHECK(curve.points[k].threshold < curve.points[k - 1].threshold);
        }
    }
}

TEST_CASE("input validation") {
    const std::vector<double> scores = {0.2, 0.8};
    CHECK_THROWS_AS(auc_rank(scores, std::vector<BinaryLabel>{P}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        auc_rank(std::vector<double>{std::nan(""), 0.1},
                 std::vector<BinaryLabel>{P, N}),
        std::invalid_argument);
    CHECK_THROWS_AS(auc_rank(std::vector<double>{kInf, 0.1},
                             std::vector<BinaryLabel>{P, N}),
                    std::invalid_argument);
    CHECK_THROWS_AS(auc_rank(scores, std::vector<BinaryLabel>{P, P}),
                    DegenerateDataError);
    CHECK_THROWS_AS(auc_rank(scores, std::vector<BinaryLabel>{N, N}),
                    DegenerateDataError);
    CHECK_THROWS_AS(auc_rank(std::vector<double>{}, std::vector<BinaryLabel>{}),
                    DegenerateDataError);
}
