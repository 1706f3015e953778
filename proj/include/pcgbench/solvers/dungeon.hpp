#pragma once

#include <cstdint>
#include <vector>

#include "pcgbench/solvers/grid.hpp"

namespace pcgb::solvers {

enum class DungeonTile : std::uint8_t { floor, wall, start, exit, monster, treasure, potion };

struct DungeonRules {
    int player_hp = 40;
    int monster_damage = 5;
    int potion_heal = 10;
    /// Maximum number of distinct (cell, consumed-set) states before the
    /// search gives up and reports the level as unsolved.
    std::size_t max_states = 20000;
};

struct DungeonLevel {
    int width = 0;
    int height = 0;
    std::vector<DungeonTile> tiles;  // row-major
};

struct DungeonResult {
    bool solvable = false;
    bool exhausted = false;  // budget hit before an answer was found
    int steps = 0;
    int kills = 0;
    int potions = 0;
    int hp_left = 0;
    std::vector<Move> path;
    std::size_t states = 0;
};

/// Shortest path (fewest steps) from the start tile to the exit tile that
/// keeps the player alive; among equally short paths, the one with the most
/// kills. Deterministic combat: entering a monster cell
/// kills it at the cost of `monster_damage` hp; entering a potion cell heals
/// `potion_heal`; both are consumed. The player dies when hp drops to 0 or
/// below. Breadth-first over (cell, consumed monsters and potions); hp is a
/// function of that set. Requires exactly one start and one exit and at most
/// 128 monsters plus potions (std::invalid_argument otherwise).
[[nodiscard]] DungeonResult solve_dungeon(const DungeonLevel& level, const DungeonRules& rules = {});

/// Replays a path under the same rules; `alive` is false if the path leaves
/// the grid, enters a wall or the player dies.
struct DungeonReplay {
    bool alive = false;
    bool at_exit = false;
    int kills = 0;
    int hp = 0;
};
[[nodiscard]] DungeonReplay replay_dungeon(const DungeonLevel& level, const DungeonRules& rules,
                                           const std::vector<Move>& path);

}  // namespace pcgb::solvers
