#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aucgap/records.hpp"

namespace aucgap {

// One synthetic subgroup: n_pos positive and n_neg negative scores with
// separation d_prime (mean shift of the positive scores in units of the
// shared standard deviation).
struct GroupRecipe {
    std::string group;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    double d_prime = 0.0;
};

// Deterministic binormal cohort: negative scores ~ N(0, 1), positive scores
// ~ N(d_prime, 1), drawn by inverse-CDF over a counter-based uniform stream
// so identical recipes and seed reproduce the sequence bit for bit. Each
// record carries attribute "group" = recipe name. The theoretical AUC of a
// group is binormal_auc(d_prime) = Phi(d_prime / sqrt(2)).
//
// Within a group the positives come first; groups appear in recipe order.
std::vector<EvaluationRecord> generate_binormal(
    std::span<const GroupRecipe> recipes, std::uint64_t seed);

} // namespace aucgap
