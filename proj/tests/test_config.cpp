#include <doctest.h>

#include <json.hpp>

#include "aucgap/config.hpp"
#include "aucgap/errors.hpp"
#include "support.hpp"

using namespace aucgap;
using nlohmann::json;

namespace {

const char* kFullConfig = R"({
  "input": "preds.csv",
  "model": "model-a",
  "task": "binary",
  "score_column": "p_hat",
  "label_column": "outcome",
  "positive_label": "yes",
  "negative_label": "no",
  "attributes": ["age_band"],
  "group_by": ["gender"],
  "intersect": [["gender", "ses"]],
  "explicit_groups": [{"name": "everyone", "where": {}}],
  "fold_column": "fold",
  "min_pos": 5,
  "min_neg": 6,
  "bootstrap": {"enabled": true, "n_resamples": 250, "seed": 17},
  "report_out": "report.json",
  "plot_out": "plot.json",
  "allow_missing": true
})";

} // namespace

TEST_CASE("a full config document parses into every field") {
    const AuditConfig config = config_from_json(json::parse(kFullConfig));
    CHECK(config.input == "preds.csv");
    CHECK(config.model == "model-a");
    CHECK(config.task == TaskKind::binary);
    CHECK(config.score_column == "p_hat");
    CHECK(config.label_column == "outcome");
    CHECK(config.positive_label == "yes");
    CHECK(config.negative_label == std::optional<std::string>("no"));
    CHECK(config.attributes == std::vector<std::string>{"age_band"});
    CHECK(config.group_by == std::vector<std::string>{"gender"});
    REQUIRE(config.intersect.size() == 1);
    CHECK(config.intersect[0] == std::vector<std::string>{"gender", "ses"});
    REQUIRE(config.explicit_groups.size() == 1);
    CHECK(config.explicit_groups[0].name == "everyone");
    CHECK(config.explicit_groups[0].where.empty());
    CHECK(config.fold_column == std::optional<std::string>("fold"));
    CHECK(config.min_pos == 5);
    CHECK(config.min_neg == 6);
    CHECK(config.bootstrap.enabled);
    CHECK(config.bootstrap.n_resamples == 250);
    CHECK(config.bootstrap.seed == 17);
    CHECK(config.report_out == "report.json");
    CHECK(config.plot_out == "plot.json");
    CHECK(config.allow_missing);
    validate_config(config);
}

TEST_CASE("defaults") {
    const AuditConfig config = config_from_json(json::parse("{}"));
    CHECK(config.task == TaskKind::binary);
    CHECK(config.score_column == "score");
    CHECK(config.label_column == "label");
    CHECK(config.positive_label == "1");
    CHECK_FALSE(config.negative_label.has_value());
    CHECK(config.min_pos == 10);
    CHECK(config.min_neg == 10);
    CHECK_FALSE(config.bootstrap.enabled);
    CHECK(config.bootstrap.n_resamples == 1000);
    CHECK_FALSE(config.allow_missing);
}

TEST_CASE("strict parsing rejects unknown keys and wrong types") {
    CHECK_THROWS_WITH_AS(config_from_json(json::parse(R"({"inptu": "x"})")),
                         "unknown config key \"inptu\"", ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"input": 5})")),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"min_pos": -1})")),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"group_by": "gender"})")),
                    ConfigError);
    CHECK_THROWS_AS(
        config_from_json(json::parse(R"({"bootstrap": {"x": 1}})")),
        ConfigError);
    CHECK_THROWS_AS(
        config_from_json(json::parse(R"({"explicit_groups": [{"where": {}}]})")),
        ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"task": "regression"})")),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"([1,2])")), ConfigError);
}

TEST_CASE("validate_config consistency rules") {
    AuditConfig base = config_from_json(json::parse(
        R"({"input": "x.csv", "group_by": ["g"]})"));
    validate_config(base); // sane

    SUBCASE("input required") {
        AuditConfig config = base;
        config.input.clear();
        CHECK_THROWS_AS(validate_config(config), ConfigError);
    }
    SUBCASE("groups required") {
        AuditConfig config = base;
        config.group_by.clear();
        CHECK_THROWS_AS(validate_config(config), ConfigError);
    }
    SUBCASE("multiclass needs score_columns") {
        AuditConfig config = base;
        config.task = TaskKind::multiclass;
        CHECK_THROWS_AS(validate_config(config), ConfigError);
        config.score_columns = {{"a", "s_a"}, {"b", "s_b"}};
        validate_config(config);
    }
    SUBCASE("real-threshold needs threshold") {
        AuditConfig config = base;
        config.task = TaskKind::real_threshold;
        CHECK_THROWS_AS(validate_config(config), ConfigError);
        config.threshold = 2.5;
        validate_config(config);
    }
    SUBCASE("task-specific keys are rejected elsewhere") {
        AuditConfig config = base;
        config.threshold = 1.0;
        CHECK_THROWS_AS(validate_config(config), ConfigError);

        AuditConfig config2 = base;
        config2.score_columns = {{"a", "s_a"}, {"b", "s_b"}};
        CHECK_THROWS_AS(validate_config(config2), ConfigError);

        AuditConfig config3 = base;
        config3.class_filter = {"a"};
        CHECK_THROWS_AS(validate_config(config3), ConfigError);
    }
    SUBCASE("label literals must differ") {
        AuditConfig config = base;
        config.negative_label = config.positive_label;
        CHECK_THROWS_AS(validate_config(config), ConfigError);
    }
    SUBCASE("intersections need two attributes") {
        AuditConfig config = base;
        config.intersect = {{"gender"}};
        CHECK_THROWS_AS(validate_config(config), ConfigError);
    }
    SUBCASE("bootstrap resamples floor") {
        AuditConfig config = base;
        config.bootstrap.enabled = true;
        config.bootstrap.n_resamples = 99;
        CHECK_THROWS_AS(validate_config(config), ConfigError);
    }
    SUBCASE("minimums at least one") {
        AuditConfig config = base;
        config.min_pos = 0;
        CHECK_THROWS_AS(validate_config(config), ConfigError);
    }
}

TEST_CASE("attribute_columns unions every referenced column") {
    AuditConfig config = config_from_json(json::parse(R"({
      "input": "x.csv",
      "attributes": ["zeta"],
      "group_by": ["gender"],
      "intersect": [["gender", "ses"]],
      "explicit_groups": [{"name": "n", "where": {"race": "a"}}]
    })"));
    CHECK(attribute_columns(config) ==
          std::vector<std::string>{"gender", "race", "ses", "zeta"});
}

TEST_CASE("group_specs preserves declaration order within kinds") {
    AuditConfig config = config_from_json(json::parse(R"({
      "group_by": ["gender"],
      "intersect": [["gender", "ses"]],
      "explicit_groups": [{"name": "n", "where": {"race": "a"}}]
    })"));
    const std::vector<GroupSpec> specs = group_specs(config);
    REQUIRE(specs.size() == 3);
    CHECK(std::holds_alternative<SingleAttributeSpec>(specs[0]));
    CHECK(std::holds_alternative<IntersectionSpec>(specs[1]));
    CHECK(std::holds_alternative<ExplicitSpec>(specs[2]));
}

TEST_CASE("canonical JSON form is stable and digestable") {
    const AuditConfig config = config_from_json(json::parse(kFullConfig));
    const json first = config_to_json(config);
    const json second = config_to_json(config);
    CHECK(first.dump() == second.dump());
    // Output paths are runtime destinations, not audit semantics.
    CHECK_FALSE(first.contains("report_out"));
    CHECK_FALSE(first.contains("plot_out"));
    CHECK(first.at("task") == "binary");
    CHECK(first.at("bootstrap").at("seed") == 17);
}

TEST_CASE("config files load strictly") {
    const testsupport::TempDir dir("config");
    const auto good = dir.file("good.json");
    testsupport::write_file(good, R"({"input": "x.csv", "group_by": ["g"]})");
    const AuditConfig config = load_config_file(good);
    CHECK(config.input == "x.csv");

    const auto bad = dir.file("bad.json");
    testsupport::write_file(bad, "{nope");
    CHECK_THROWS_AS(load_config_file(bad), ConfigError);
    CHECK_THROWS_AS(load_config_file(dir.file("absent.json")), IoError);
}
