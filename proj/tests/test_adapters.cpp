#include <doctest.h>

#include <cmath>
#include <vector>

#include "aucgap/adapters.hpp"
#include "aucgap/errors.hpp"
#include "aucgap/normal.hpp"
#include "aucgap/rng.hpp"
#include "aucgap/roc.hpp"

using namespace aucgap;

namespace {

MulticlassRecord mc(std::map<std::string, double> scores,
                    const std::string& true_class, const std::string& group) {
    MulticlassRecord record;
    record.class_scores = std::move(scores);
    record.true_class = true_class;
    record.attributes.emplace("group", group);
    return record;
}

// 30 records over classes a/b/c and groups g1/g2 where the true class's
// score is always strictly highest: every one-vs-rest AUC is exactly 1.
std::vector<MulticlassRecord> perfect_cohort() {
    const std::vector<std::string> classes = {"a", "b", "c"};
    std::vector<MulticlassRecord> records;
    for (int i = 0; i < 30; ++i) {
        const std::string& truth = classes[i % 3];
        std::map<std::string, double> scores;
        for (const std::string& name : classes) {
            scores[name] = name == truth ? 0.8 + 0.001 * i : 0.2 + 0.001 * i;
        }
        records.push_back(mc(scores, truth, i % 2 == 0 ? "g1" : "g2"));
    }
    return records;
}

} // namespace

TEST_CASE("one_vs_rest picks the target score and relabels") {
    const std::vector<MulticlassRecord> records = {
        mc({{"A", 0.7}, {"B", 0.2}, {"C", 0.1}}, "A", "g1"),
    };
    const auto as_a = one_vs_rest(records, "A");
    REQUIRE(as_a.size() == 1);
    CHECK(as_a[0].score == 0.7);
    CHECK(as_a[0].label == BinaryLabel::positive);
    CHECK(as_a[0].attributes.at("group") == "g1");

    // Target B: zero positives, which is an error by contract, so add a
    // B-truth record before checking the relabeling.
    std::vector<MulticlassRecord> two = records;
    two.push_back(mc({{"A", 0.3}, {"B", 0.6}, {"C", 0.1}}, "B", "g1"));
    const auto as_b = one_vs_rest(two, "B");
    CHECK(as_b[0].score == 0.2);
    CHECK(as_b[0].label == BinaryLabel::negative);
    CHECK(as_b[1].label == BinaryLabel::positive);
}

TEST_CASE("a perfectly ranked cohort scores AUC 1 for every class") {
    const auto records = perfect_cohort();
    for (const std::string name : {"a", "b", "c"}) {
        const auto binary = one_vs_rest(records, name);
        std::vector<double> scores;
        std::vector<BinaryLabel> labels;
        for (const EvaluationRecord& record : binary) {
            scores.push_back(record.score);
            labels.push_back(record.label);
        }
        CHECK(auc_rank(scores, labels).value == 1.0);
    }
}

TEST_CASE("one_vs_rest error cases") {
    const auto records = perfect_cohort();
    CHECK_THROWS_AS(one_vs_rest(records, "z"), ConfigError);
    CHECK_THROWS_AS(one_vs_rest({}, "a"), std::invalid_argument);

    // A class that never occurs as the truth has no positives.
    std::vector<MulticlassRecord> no_c;
    for (const MulticlassRecord& record : records) {
        if (record.true_class != "c") {
            no_c.push_back(record);
        }
    }
    CHECK_THROWS_AS(one_vs_rest(no_c, "c"), DegenerateDataError);
}

TEST_CASE("threshold_real labels by true_value >= threshold") {
    std::vector<RealTargetRecord> records;
    for (const auto& [predicted, truth] :
         std::vector<std::pair<double, double>>{
             {1.0, 1.2}, {3.0, 3.4}, {2.5, 2.0}}) {
        RealTargetRecord record;
        record.predicted_value = predicted;
        record.true_value = truth;
        records.push_back(record);
    }
    const auto binary = threshold_real(records, 2.0);
    REQUIRE(binary.size() == 3);
    CHECK(binary[0].label == BinaryLabel::negative);
    CHECK(binary[1].label == BinaryLabel::positive);
    CHECK(binary[2].label == BinaryLabel::positive); // 2.0 >= 2.0
    CHECK(binary[1].score == 3.0);
}

TEST_CASE("thresholds outside the target range are degenerate") {
    std::vector<RealTargetRecord> records;
    for (double value : {1.0, 2.0, 3.0}) {
        RealTargetRecord record;
        record.predicted_value = value;
        record.true_value = value;
        records.push_back(record);
    }
    CHECK_THROWS_AS(threshold_real(records, 0.5), DegenerateDataError);
    CHECK_THROWS_AS(threshold_real(records, 9.0), DegenerateDataError);
    CHECK_THROWS_AS(threshold_real(records, std::nan("")),
                    std::invalid_argument);
    CHECK_THROWS_AS(threshold_real({}, 1.0), std::invalid_argument);
}

TEST_CASE("a lightly noised regressor audits near AUC 1") {
    // Targets ~ N(0,1); predictions add noise with sd 0.05 of the target
    // sd; threshold at the distribution median.
    std::vector<RealTargetRecord> records;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double truth =
            normal_quantile(rng::unit_open(rng::derive(404, 2 * i)));
        const double noise =
            normal_quantile(rng::unit_open(rng::derive(404, 2 * i + 1)));
        RealTargetRecord record;
        record.true_value = truth;
        record.predicted_value = truth + 0.05 * noise;
        records.push_back(record);
    }
    const auto binary = threshold_real(records, 0.0);
    std::vector<double> scores;
    std::vector<BinaryLabel> labels;
    for (const EvaluationRecord& record : binary) {
        scores.push_back(record.score);
        labels.push_back(record.label);
    }
    CHECK(auc_rank(scores, labels).value > 0.9);
}

TEST_CASE("per_class_gap_sweep audits every class against the groups") {
    const auto records = perfect_cohort();
    const std::vector<GroupSpec> specs = {SingleAttributeSpec{"group"}};
    GapOptions options; // library defaults: min 1/1

    const auto sweep = per_class_gap_sweep(records, specs, options);
    REQUIRE(sweep.size() == 3);
    for (const auto& [name, entry] : sweep) {
        REQUIRE(entry.analysis.has_value());
        CHECK(entry.error.empty());
        CHECK(entry.analysis->gap.value == 0.0);
        CHECK(entry.analysis->gap.n_valid_groups == 2);
        for (const auto& [group, group_entry] :
             entry.analysis->table.entries) {
            REQUIRE(group_entry.result.auc.has_value());
            CHECK(group_entry.result.auc->value == 1.0);
        }
    }
}

TEST_CASE("sweep records per-class degeneracies instead of failing") {
    auto records = perfect_cohort();
    std::vector<MulticlassRecord> no_c;
    for (const MulticlassRecord& record : records) {
        if (record.true_class != "c") {
            no_c.push_back(record);
        }
    }
    const std::vector<GroupSpec> specs = {SingleAttributeSpec{"group"}};
    GapOptions options;
    const auto sweep = per_class_gap_sweep(no_c, specs, options);
    REQUIRE(sweep.size() == 3);
    CHECK(sweep.at("a").analysis.has_value());
    CHECK(sweep.at("b").analysis.has_value());
    CHECK_FALSE(sweep.at("c").analysis.has_value());
    CHECK_FALSE(sweep.at("c").error.empty());
}

TEST_CASE("sweep class filter") {
    const auto records = perfect_cohort();
    const std::vector<GroupSpec> specs = {SingleAttributeSpec{"group"}};
    GapOptions options;
    const std::vector<std::string> filter = {"b"};
    const auto sweep = per_class_gap_sweep(records, specs, options, filter);
    REQUIRE(sweep.size() == 1);
    CHECK(sweep.contains("b"));

    const std::vector<std::string> unknown = {"nope"};
    CHECK_THROWS_AS(per_class_gap_sweep(records, specs, options, unknown),
                    ConfigError);
}
