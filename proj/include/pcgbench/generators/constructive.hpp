#pragma once

#include <string>
#include <vector>

#include "pcgbench/core/problem.hpp"
#include "pcgbench/core/rng.hpp"
#include "pcgbench/generators/search.hpp"

namespace pcgb::generators {

/// True for the problems the constructive generator handles (binary-v0,
/// sokoban-v0, zelda-v0).
[[nodiscard]] bool constructive_supports(const std::string& problem_name);

/// Perfect maze over a width x height grid by randomized Prim's algorithm.
/// Cells at even (x, y) are rooms; returns row-major 1 = wall, 0 = open.
[[nodiscard]] std::vector<int> prim_maze(int width, int height, Rng& rng);

/// Removes walls uniformly at random until more than `fraction` of the
/// original walls are gone. Returns the number erased.
std::size_t erase_walls(std::vector<int>& walls, double fraction, Rng& rng);

/// One generated chromosome (content plus a sampled control), not yet scored.
/// Throws std::invalid_argument for an unsupported problem.
[[nodiscard]] Chromosome construct(const Problem& problem, Rng& rng);

/// `count` constructed chromosomes, scored with fitness `kind` and with
/// diversity computed against the batch.
[[nodiscard]] std::vector<Chromosome> run_constructive(const Problem& problem, std::size_t count, FitnessKind kind,
                                                       Rng& rng);

}  // namespace pcgb::generators
