#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcgbench/core/problem.hpp"

namespace pcgb {

struct ArtifactReport {
    double quality = 0.0;
    double diversity = 0.0;
    double controllability = 0.0;
    InfoRecord info;

    [[nodiscard]] bool feasible() const { return quality == 1.0; }
    [[nodiscard]] bool unique() const { return diversity == 1.0; }
    [[nodiscard]] bool controlled() const { return controllability == 1.0; }
};

struct BenchmarkReport {
    double r_quality = 0.0;          // percent
    double r_diversity = 0.0;        // percent
    double r_controllability = 0.0;  // percent
    std::vector<ArtifactReport> artifacts;
};

/// An input at `index` failed validation against the problem's spaces.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, std::size_t index) : std::runtime_error(what), index_(index) {}
    [[nodiscard]] std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

struct EvaluateOptions {
    /// Worker threads for info/quality and diversity fan-out. Results are
    /// joined by index, so the report does not depend on this value.
    unsigned workers = 1;
};

/// Scores a batch. Throws std::invalid_argument for an empty batch and
/// EvaluationError for content/control outside the problem's spaces or a
/// control list of the wrong length.
[[nodiscard]] BenchmarkReport evaluate(const Problem& problem, std::span<const Value> contents,
                                       std::optional<std::span<const Value>> controls = std::nullopt,
                                       const EvaluateOptions& options = {});

/// Info, quality and (when `control` is given) controllability of one
/// artifact; diversity is left at 0 for the caller to fill in. No validation.
[[nodiscard]] ArtifactReport assess(const Problem& problem, const Value& content, const Value* control);

/// Set-level diversity of every member: min over j != i of the pairwise
/// diversity, 1 for a singleton.
[[nodiscard]] std::vector<double> batch_diversity(const Problem& problem, std::span<const InfoRecord> infos,
                                                  unsigned workers = 1);

/// Count-based percentage helpers over artifact reports.
[[nodiscard]] std::size_t count_feasible(std::span<const ArtifactReport> reports);
[[nodiscard]] std::size_t count_unique(std::span<const ArtifactReport> reports);
[[nodiscard]] std::size_t count_controlled(std::span<const ArtifactReport> reports);

void to_json(nlohmann::json& j, const ArtifactReport& r);
void to_json(nlohmann::json& j, const BenchmarkReport& r);

/// Space values as nested JSON arrays of integers (records as arrays in field order).
[[nodiscard]] nlohmann::json value_to_json(const Value& v);
/// Inverse of value_to_json; records may also be given as objects keyed by field name.
[[nodiscard]] Value value_from_json(const nlohmann::json& j, const SpaceDescriptor& space);

/// {"problem": name, "values": [...]} document for a batch.
[[nodiscard]] nlohmann::json batch_to_json(const std::string& problem, std::span<const Value> values);
/// Parses a batch document. Throws EvaluationError with the failing index
/// when an entry does not fit `space`, std::invalid_argument for a malformed document.
[[nodiscard]] std::vector<Value> batch_from_json(const nlohmann::json& doc, const SpaceDescriptor& space,
                                                 std::string* problem_name = nullptr);

}  // namespace pcgb
