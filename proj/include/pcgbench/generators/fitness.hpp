#pragma once

#include <string>

#include "pcgbench/core/evaluate.hpp"

namespace pcgb::generators {

enum class FitnessKind { q, qt, qtd };

/// The artifact's quality.
[[nodiscard]] double fitness_q(const ArtifactReport& report);

/// Quality first, then controllability: q/2 while infeasible, (q+t)/2 once feasible.
[[nodiscard]] double fitness_qt(const ArtifactReport& report);

/// Quality, then controllability, then diversity `d` against the current
/// population: q/3, (q+t)/3 once feasible, (q+t+d)/3 once also controlled.
[[nodiscard]] double fitness_qtd(const ArtifactReport& report, double d);

/// Dispatch on kind; `d` is ignored unless kind is qtd.
[[nodiscard]] double fitness(FitnessKind kind, const ArtifactReport& report, double d = 0.0);

[[nodiscard]] std::string to_string(FitnessKind kind);
/// Parses "q", "qt" or "qtd" (case-insensitive); throws std::invalid_argument otherwise.
[[nodiscard]] FitnessKind parse_fitness_kind(const std::string& text);

}  // namespace pcgb::generators
