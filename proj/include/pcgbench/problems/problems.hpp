#pragma once

#include <memory>
#include <vector>

#include "pcgbench/core/params.hpp"
#include "pcgbench/core/problem.hpp"

namespace pcgb::problems {

// Tile symbols of each grid problem, as stored in content values.
namespace binary {
enum Tile : int { empty = 0, solid = 1 };
}
namespace zelda {
enum Tile : int { empty = 0, solid = 1, player = 2, key = 3, door = 4, enemy = 5 };
}
namespace sokoban {
enum Tile : int { floor = 0, wall = 1, player = 2, crate = 3, target = 4 };
}
namespace minidungeons {
enum Tile : int { floor = 0, wall = 1, start = 2, exit = 3, monster = 4, treasure = 5, potion = 6 };
}
namespace isaac {
enum Tile : int { none = 0, normal = 1, start = 2, boss = 3, treasure = 4, shop = 5 };
}
namespace dave {
enum Tile : int { empty = 0, solid = 1, spike = 2, diamond = 3, start = 4, exit = 5 };
}

/// Grid2D value from row-major symbols, and back.
[[nodiscard]] Value make_grid(const std::vector<int>& tiles, int width, int height);
[[nodiscard]] std::vector<int> grid_symbols(const Value& grid, int width, int height);

// Default variant parameters and factories. Factories expect a complete
// parameter set (defaults with overrides applied).
[[nodiscard]] VariantParams binary_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_binary(const VariantParams& params);

[[nodiscard]] VariantParams zelda_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_zelda(const VariantParams& params);

[[nodiscard]] VariantParams sokoban_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_sokoban(const VariantParams& params);

[[nodiscard]] VariantParams minidungeons_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_minidungeons(const VariantParams& params);

[[nodiscard]] VariantParams isaac_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_isaac(const VariantParams& params);

[[nodiscard]] VariantParams dave_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_dave(const VariantParams& params);

[[nodiscard]] VariantParams elimination_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_elimination(const VariantParams& params);

[[nodiscard]] VariantParams building_defaults();
[[nodiscard]] std::unique_ptr<Problem> make_building(const VariantParams& params);

}  // namespace pcgb::problems
