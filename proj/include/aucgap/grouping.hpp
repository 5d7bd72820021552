#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "aucgap/records.hpp"

namespace aucgap {

// One group per observed value of the attribute ("attr=value").
struct SingleAttributeSpec {
    std::string attribute;
};

// One group per observed value combination ("a=x∧b=y"), attributes joined
// in the order given. Only observed combinations produce groups.
struct IntersectionSpec {
    std::vector<std::string> attributes;
};

// A named group defined by an attribute-equality conjunction. An empty
// conjunction matches every record.
struct ExplicitSpec {
    std::string name;
    std::map<std::string, std::string> where;
};

using GroupSpec = std::variant<SingleAttributeSpec, IntersectionSpec, ExplicitSpec>;

// Named subgroups as index sets over the record sequence. Groups from
// different specs may overlap; a record may belong to zero groups.
// std::map keys give the lexicographic group order used everywhere.
struct GroupAssignment {
    std::map<std::string, std::vector<std::size_t>> groups;
};

enum class ExclusionReason { none, no_positives, no_negatives, below_min_size };

const char* to_string(ExclusionReason reason);

// Validity annotation for one group. Excluded groups are kept and reported,
// never dropped: an undefined AUC is not evidence of parity.
struct GroupValidity {
    std::string group;
    bool valid = false;
    ExclusionReason reason = ExclusionReason::none; // none iff valid
    std::size_t n_records = 0;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

// Builds all groups declared by the specs. Throws ConfigError on an empty
// spec list, an attribute missing from any record, or a group name declared
// by two different specs.
GroupAssignment build_groups(std::span<const EvaluationRecord> records,
                             std::span<const GroupSpec> specs);

// A group is valid iff it has at least min_pos positives and min_neg
// negatives. Annotates only; memberships are never modified.
std::vector<GroupValidity> validate_groups(
    const GroupAssignment& assignment,
    std::span<const EvaluationRecord> records,
    std::size_t min_pos, std::size_t min_neg);

} // namespace aucgap
