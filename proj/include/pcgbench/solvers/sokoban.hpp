#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pcgbench/solvers/grid.hpp"

namespace pcgb::solvers {

enum class SokobanTile : std::uint8_t { floor, wall, target, crate, crate_on_target, player, player_on_target };

/// A Sokoban level; cells outside the grid behave as walls. At most 64 cells.
struct SokobanLevel {
    int width = 0;
    int height = 0;
    std::vector<SokobanTile> tiles;  // row-major

    [[nodiscard]] SokobanTile at(int x, int y) const { return tiles[static_cast<std::size_t>(y * width + x)]; }
};

/// Level violates the solver's preconditions (player count, crate/target
/// balance, size).
class SokobanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Minimum-length move sequence (every player step counts, pushes
/// included) that leaves every crate on a target, or nullopt when no such
/// sequence exists. A* over (player cell, crate set) with the sum of
/// Manhattan crate-to-nearest-target distances as the heuristic.
/// Throws SokobanError unless there is exactly one player and the crate
/// count equals the target count.
[[nodiscard]] std::optional<std::vector<Move>> solve_sokoban(const SokobanLevel& level);

/// Applies moves under Sokoban rules. Returns the resulting level, or
/// nullopt if a move walks into a wall or pushes a crate into a wall/crate.
[[nodiscard]] std::optional<SokobanLevel> replay_sokoban(const SokobanLevel& level, const std::vector<Move>& moves);

/// True when every crate stands on a target.
[[nodiscard]] bool sokoban_solved(const SokobanLevel& level);

}  // namespace pcgb::solvers
