#include "aucgap/synthetic.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "aucgap/normal.hpp"
#include "aucgap/rng.hpp"

namespace aucgap {

std::vector<EvaluationRecord> generate_binormal(
    std::span<const GroupRecipe> recipes, std::uint64_t seed) {
    if (recipes.empty()) {
        throw std::invalid_argument("no group recipes");
    }
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const GroupRecipe& recipe : recipes) {
        if (!seen.insert(recipe.group).second) {
            throw std::invalid_argument("duplicate group recipe \"" +
                                        recipe.group + "\"");
        }
        if (recipe.n_pos < 1 || recipe.n_neg < 1) {
            throw std::invalid_argument("group \"" + recipe.group +
                                        "\" needs at least one record per class");
        }
        if (!std::isfinite(recipe.d_prime) || recipe.d_prime < 0.0) {
            throw std::invalid_argument("group \"" + recipe.group +
                                        "\" needs finite d_prime >= 0");
        }
        total += recipe.n_pos + recipe.n_neg;
    }

    std::vector<EvaluationRecord> records;
    records.reserve(total);
    for (std::size_t g = 0; g < recipes.size(); ++g) {
        const GroupRecipe& recipe = recipes[g];
        const std::uint64_t group_seed = rng::derive(seed, g);
        const std::size_t n = recipe.n_pos + recipe.n_neg;
        for (std::size_t i = 0; i < n; ++i) {
            const bool positive = i < recipe.n_pos;
            const double u = rng::unit_open(rng::derive(group_seed, i));
            const double z = normal_quantile(u);
            EvaluationRecord record;
            record.score = positive ? z + recipe.d_prime : z;
            record.label =
                positive ? BinaryLabel::positive : BinaryLabel::negative;
            record.attributes.emplace("group", recipe.group);
            records.push_back(std::move(record));
        }
    }
    return records;
}

} // namespace aucgap
