#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "aucgap/records.hpp"

namespace testsupport {

// Independent O(n^2) AUC oracle: fraction of (positive, negative) pairs
// where the positive outscores the negative, ties counted half. Kept free
// of any library code so it can arbitrate.
inline double pairwise_auc(std::span<const double> scores,
                           std::span<const aucgap::BinaryLabel> labels) {
    double wins = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (labels[i] != aucgap::BinaryLabel::positive) {
            continue;
        }
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (labels[j] != aucgap::BinaryLabel::negative) {
                continue;
            }
            ++pairs;
            if (scores[i] > scores[j]) {
                wins += 1.0;
            } else if (scores[i] == scores[j]) {
                wins += 0.5;
            }
        }
    }
    return wins / static_cast<double>(pairs);
}

struct Instance {
    std::vector<double> scores;
    std::vector<aucgap::BinaryLabel> labels;
};

// Random instance with both classes present. tie_rate controls how many
// distinct score values exist: the scores are drawn from a grid of about
// n * (1 - tie_rate) points, so higher rates force more tied scores.
inline Instance random_instance(std::mt19937_64& rng, std::size_t n,
                                double tie_rate) {
    Instance instance;
    instance.scores.reserve(n);
    instance.labels.reserve(n);
    const std::size_t grid = std::max<std::size_t>(
        1, static_cast<std::size_t>(static_cast<double>(n) * (1.0 - tie_rate)));
    std::uniform_int_distribution<std::size_t> pick(0, grid - 1);
    std::bernoulli_distribution positive(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        instance.scores.push_back(static_cast<double>(pick(rng)) /
                                  static_cast<double>(grid));
        instance.labels.push_back(positive(rng)
                                      ? aucgap::BinaryLabel::positive
                                      : aucgap::BinaryLabel::negative);
    }
    // Both classes must occur for the AUC to exist.
    instance.labels[0] = aucgap::BinaryLabel::positive;
    if (n > 1) {
        instance.labels[1] = aucgap::BinaryLabel::negative;
    }
    return instance;
}

// Scratch directory removed on destruction.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("aucgap-test-" + tag + "-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path file(const std::string& name) const {
        return path / name;
    }
};

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    stream << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(stream)),
                        std::istreambuf_iterator<char>());
    return content;
}

// Builds a record with a score, label, and one "group" attribute.
inline aucgap::EvaluationRecord make_record(double score, bool positive,
                                            const std::string& group) {
    aucgap::EvaluationRecord record;
    record.score = score;
    record.label = positive ? aucgap::BinaryLabel::positive
                            : aucgap::BinaryLabel::negative;
    record.attributes.emplace("group", group);
    return record;
}

} // namespace testsupport
