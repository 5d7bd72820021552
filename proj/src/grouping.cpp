#include "aucgap/grouping.hpp"

#include <stdexcept>

#include "aucgap/errors.hpp"

namespace aucgap {

const char* to_string(ExclusionReason reason) {
    switch (reason) {
        case ExclusionReason::none: return "none";
        case ExclusionReason::no_positives: return "no-positives";
        case ExclusionReason::no_negatives: return "no-negatives";
        case ExclusionReason::below_min_size: return "below-min-size";
    }
    return "unknown";
}

namespace {

const std::string& attribute_value(const EvaluationRecord& record,
                                   const std::string& attribute,
                                   std::size_t record_index) {
    if (attribute.empty()) {
        throw ConfigError("group spec references an empty attribute name");
    }
    const auto it = record.attributes.find(attribute);
    if (it == record.attributes.end()) {
        throw ConfigError("unknown attribute \"" + attribute +
                          "\" (record " + std::to_string(record_index) +
                          " has no such attribute)");
    }
    return it->second;
}

} // namespace

GroupAssignment build_groups(std::span<const EvaluationRecord> records,
                             std::span<const GroupSpec> specs) {
    if (specs.empty()) {
        throw ConfigError("no group specs given");
    }

    GroupAssignment assignment;
    // Name -> index of the spec that first produced it; the same name from a
    // second spec is a collision, from the same spec it is the same group.
    std::map<std::string, std::size_t> origin;

    auto insert = [&](const std::string& name, std::size_t spec_index,
                      std::size_t record_index) {
        const auto [it, created] = origin.try_emplace(name, spec_index);
        if (!created && it->second != spec_index) {
            throw ConfigError("duplicate group name \"" + name +
                              "\" declared by more than one spec");
        }
        assignment.groups[name].push_back(record_index);
    };

    for (std::size_t s = 0; s < specs.size(); ++s) {
        const GroupSpec& spec = specs[s];
        if (const auto* single = std::get_if<SingleAttributeSpec>(&spec)) {
            for (std::size_t r = 0; r < records.size(); ++r) {
                const std::string& value =
                    attribute_value(records[r], single->attribute, r);
                insert(single->attribute + "=" + value, s, r);
            }
        } else if (const auto* inter = std::get_if<IntersectionSpec>(&spec)) {
            if (inter->attributes.empty()) {
                throw ConfigError("intersection spec with no attributes");
            }
            for (std::size_t r = 0; r < records.size(); ++r) {
                std::string name;
                for (const std::string& attribute : inter->attributes) {
                    const std::string& value =
                        attribute_value(records[r], attribute, r);
                    if (!name.empty()) {
                        name += "∧"; // ∧
                    }
                    name += attribute + "=" + value;
                }
                insert(name, s, r);
            }
        } else {
            const auto& expl = std::get<ExplicitSpec>(spec);
            if (expl.name.empty()) {
                throw ConfigError("explicit group with empty name");
            }
            // Register the name even if no record matches, so an empty
            // explicit group still shows up (excluded) in reports.
            const auto [it, created] = origin.try_emplace(expl.name, s);
            if (!created && it->second != s) {
                throw ConfigError("duplicate group name \"" + expl.name +
                                  "\" declared by more than one spec");
            }
            assignment.groups.try_emplace(expl.name);
            for (std::size_t r = 0; r < records.size(); ++r) {
                bool matches = true;
                for (const auto& [attribute, expected] : expl.where) {
                    if (attribute_value(records[r], attribute, r) != expected) {
                        matches = false;
                        break;
                    }
                }
                if (matches) {
                    assignment.groups[expl.name].push_back(r);
                }
            }
        }
    }
    return assignment;
}

std::vector<GroupValidity> validate_groups(
    const GroupAssignment& assignment,
    std::span<const EvaluationRecord> records,
    std::size_t min_pos, std::size_t min_neg) {
    if (min_pos < 1 || min_neg < 1) {
        throw std::invalid_argument("min_pos and min_neg must be at least 1");
    }

    std::vector<GroupValidity> result;
    result.reserve(assignment.groups.size());
    for (const auto& [name, members] : assignment.groups) {
        GroupValidity v;
        v.group = name;
        v.n_records = members.size();
        for (const std::size_t index : members) {
            if (index >= records.size()) {
                throw std::invalid_argument(
                    "group \"" + name + "\" references record index " +
                    std::to_string(index) + " beyond the record sequence");
            }
            if (records[index].label == BinaryLabel::positive) {
                ++v.n_pos;
            } else {
                ++v.n_neg;
            }
        }
        if (v.n_pos == 0) {
            v.reason = ExclusionReason::no_positives;
        } else if (v.n_neg == 0) {
            v.reason = ExclusionReason::no_negatives;
        } else if (v.n_pos < min_pos || v.n_neg < min_neg) {
            v.reason = ExclusionReason::below_min_size;
        } else {
            v.valid = true;
        }
        result.push_back(std::move(v));
    }
    return result;
}

} // namespace aucgap
