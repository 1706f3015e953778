#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pcgb::solvers {

enum class PlatformerTile : std::uint8_t { empty, solid, spike, diamond, start, exit };

enum class PlatformerAction : std::uint8_t { idle, left, right, jump, jump_left, jump_right };

/// Discrete side-view physics. One step: an optional jump initiation (only
/// when standing on solid ground and not already rising), one horizontal
/// cell of movement (also while airborne), then one vertical cell: up while
/// rising, down when unsupported. Cells outside the grid are solid.
struct PlatformerPhysics {
    int jump_height = 2;
};

struct PlatformerLevel {
    int width = 0;
    int height = 0;
    std::vector<PlatformerTile> tiles;  // row-major, y grows downward

    [[nodiscard]] PlatformerTile at(int x, int y) const { return tiles[static_cast<std::size_t>(y * width + x)]; }
};

struct PlatformerState {
    int x = 0;
    int y = 0;
    int rise = 0;              // remaining upward cells of the current jump
    std::uint32_t diamonds = 0;  // bitmask over diamond indices (row-major order)
    friend bool operator==(const PlatformerState&, const PlatformerState&) = default;
};

struct PlatformerTrace {
    std::vector<PlatformerAction> actions;
    int jumps = 0;
    int diamonds = 0;
};

/// One physics step; nullopt when the action is not allowed (jumping while
/// airborne) or the player touches a spike.
[[nodiscard]] std::optional<PlatformerState> platformer_step(const PlatformerLevel& level,
                                                             const PlatformerPhysics& physics,
                                                             const PlatformerState& state, PlatformerAction action);

/// Shortest trace (fewest steps, then fewest jumps) from the start tile to
/// the exit tile with every diamond collected; nullopt when none exists.
/// Requires exactly one start and one exit and at most 16 diamonds
/// (std::invalid_argument otherwise).
[[nodiscard]] std::optional<PlatformerTrace> solve_platformer(const PlatformerLevel& level,
                                                              const PlatformerPhysics& physics = {});

/// Cells the player can occupy starting from the start tile (diamonds
/// ignored). Row-major mask; all zero when there is no unique start.
[[nodiscard]] std::vector<std::uint8_t> reachable_cells(const PlatformerLevel& level,
                                                        const PlatformerPhysics& physics = {});

struct PlatformerReplay {
    bool valid = false;    // every action was legal and the player survived
    bool finished = false; // ended on the exit with all diamonds
    int jumps = 0;
    int diamonds = 0;
};

[[nodiscard]] PlatformerReplay replay_platformer(const PlatformerLevel& level, const PlatformerPhysics& physics,
                                                 const std::vector<PlatformerAction>& actions);

[[nodiscard]] bool is_jump(PlatformerAction a);

}  // namespace pcgb::solvers
