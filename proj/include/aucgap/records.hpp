#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace aucgap {

enum class BinaryLabel : std::uint8_t { negative = 0, positive = 1 };

// One scored instance. Attribute values are category strings; continuous
// attributes must be binned upstream. std::map keeps iteration (and thus
// every derived artifact) deterministic.
struct EvaluationRecord {
    double score = 0.0;
    BinaryLabel label = BinaryLabel::negative;
    std::map<std::string, std::string> attributes;
    std::optional<std::string> fold_id;
};

// One multiclass instance before the one-vs-rest reduction.
struct MulticlassRecord {
    std::map<std::string, double> class_scores; // class name -> score
    std::string true_class;                     // must be a key of class_scores
    std::map<std::string, std::string> attributes;
    std::optional<std::string> fold_id;
};

// One real-valued-target instance before thresholding.
struct RealTargetRecord {
    double predicted_value = 0.0;
    double true_value = 0.0;
    std::map<std::string, std::string> attributes;
    std::optional<std::string> fold_id;
};

} // namespace aucgap
