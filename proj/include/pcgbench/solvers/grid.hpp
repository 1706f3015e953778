#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcgb::solvers {

enum class Move : std::uint8_t { up, down, left, right };

/// 'U', 'D', 'L', 'R'.
[[nodiscard]] char move_char(Move m);
[[nodiscard]] std::string moves_to_string(const std::vector<Move>& moves);

struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Passability grid for 4-neighbor movement.
class GridMap {
public:
    GridMap(int width, int height, bool passable = true);
    GridMap(int width, int height, std::vector<std::uint8_t> passable);

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] bool in_bounds(Cell c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
    [[nodiscard]] bool passable(Cell c) const { return in_bounds(c) && passable_[index(c)] != 0; }
    void set_passable(Cell c, bool p) { passable_[index(c)] = p ? 1 : 0; }
    [[nodiscard]] std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y * width_ + c.x); }
    [[nodiscard]] Cell cell(std::size_t index) const {
        return {static_cast<int>(index) % width_, static_cast<int>(index) / width_};
    }
    [[nodiscard]] std::size_t size() const { return passable_.size(); }
    [[nodiscard]] std::size_t passable_count() const;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> passable_;
};

struct PathResult {
    bool reachable = false;
    int distance = 0;
    std::vector<Move> actions;
};

/// Breadth-first optimal 4-neighbor path. Neighbors are expanded in the
/// order up, down, left, right. An impassable source or target is unreachable
/// unless src == dst.
[[nodiscard]] PathResult shortest_path(const GridMap& map, Cell src, Cell dst);

/// BFS step distances from `src` to every cell; -1 where unreachable.
[[nodiscard]] std::vector<int> bfs_distances(const GridMap& map, Cell src);

/// Largest shortest-path distance over all mutually reachable passable
/// pairs. Throws std::invalid_argument when no cell is passable.
[[nodiscard]] int graph_diameter(const GridMap& map);

/// Number of maximal 4-connected passable regions.
[[nodiscard]] int connected_components(const GridMap& map);

/// Cell reached by applying `m` (no bounds check).
[[nodiscard]] Cell step(Cell c, Move m);

}  // namespace pcgb::solvers
