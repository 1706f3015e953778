#include "pcgbench/generators/constructive.hpp"

#include <stdexcept>

#include "pcgbench/problems/problems.hpp"

namespace pcgb::generators {

bool constructive_supports(const std::string& problem_name) {
    return problem_name == "binary-v0" || problem_name == "sokoban-v0" || problem_name == "zelda-v0";
}

std::vector<int> prim_maze(int width, int height, Rng& rng) {
    std::vector<int> grid(static_cast<std::size_t>(width * height), 1);
    const auto at = [&](int x, int y) -> int& { return grid[static_cast<std::size_t>(y * width + x)]; };
    struct Edge {
        int wx, wy, rx, ry;  // wall cell between, and the room beyond it
    };
    std::vector<Edge> frontier;
    const auto open_room = [&](int x, int y) {
        at(x, y) = 0;
        const int dx[] = {2, -2, 0, 0};
        const int dy[] = {0, 0, 2, -2};
        for (int k = 0; k < 4; ++k) {
            const int rx = x + dx[k];
            const int ry = y + dy[k];
            if (rx < 0 || ry < 0 || rx >= width || ry >= height) continue;
            if (at(rx, ry) == 0) continue;
            frontier.push_back({x + dx[k] / 2, y + dy[k] / 2, rx, ry});
        }
    };
    const int rooms_x = (width + 1) / 2;
    const int rooms_y = (height + 1) / 2;
    open_room(2 * static_cast<int>(rng.index(static_cast<std::size_t>(rooms_x))),
              2 * static_cast<int>(rng.index(static_cast<std::size_t>(rooms_y))));
    while (!frontier.empty()) {
        const std::size_t pick = rng.index(frontier.size());
        const Edge e = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (at(e.rx, e.ry) == 0) continue;
        at(e.wx, e.wy) = 0;
        open_room(e.rx, e.ry);
    }
    return grid;
}

std::size_t erase_walls(std::vector<int>& walls, double fraction, Rng& rng) {
    std::vector<std::size_t> wall_cells;
    for (std::size_t i = 0; i < walls.size(); ++i) {
        if (walls[i] == 1) wall_cells.push_back(i);
    }
    const std::size_t original = wall_cells.size();
    std::size_t erased = 0;
    while (!wall_cells.empty() && static_cast<double>(erased) <= fraction * static_cast<double>(original)) {
        const std::size_t pick = rng.index(wall_cells.size());
        walls[wall_cells[pick]] = 0;
        wall_cells[pick] = wall_cells.back();
        wall_cells.pop_back();
        ++erased;
    }
    return erased;
}

namespace {

int blocked_sides(const std::vector<int>& walls, int width, int height, int x, int y) {
    int blocked = 0;
    const int dx[] = {1, -1, 0, 0};
    const int dy[] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
        const int nx = x + dx[k];
        const int ny = y + dy[k];
        if (nx < 0 || ny < 0 || nx >= width || ny >= height || walls[static_cast<std::size_t>(ny * width + nx)] == 1) {
            ++blocked;
        }
    }
    return blocked;
}

// Takes a uniformly random cell from `cells` (removing it), or -1 when empty.
int take(std::vector<int>& cells, Rng& rng) {
    if (cells.empty()) return -1;
    const std::size_t pick = rng.index(cells.size());
    const int c = cells[pick];
    cells[pick] = cells.back();
    cells.pop_back();
    return c;
}

void remove_cell(std::vector<int>& cells, int c) { std::erase(cells, c); }

}  // namespace

Chromosome construct(const Problem& problem, Rng& rng) {
    const auto& name = problem.name();
    if (!constructive_supports(name)) {
        throw std::invalid_argument("constructive generator does not support '" + name +
                                    "' (supported: binary-v0, sokoban-v0, zelda-v0)");
    }
    const auto& dims = problem.content_space().dims();
    const int width = static_cast<int>(dims[0]);
    const int height = static_cast<int>(dims[1]);
    Chromosome c;
    c.control = space_sample(problem.control_space(), rng);

    auto tiles = prim_maze(width, height, rng);
    if (name != "binary-v0") {
        erase_walls(tiles, 0.5, rng);
        std::vector<int> floor;
        for (int i = 0; i < width * height; ++i) {
            if (tiles[static_cast<std::size_t>(i)] == 0) floor.push_back(i);
        }
        if (name == "sokoban-v0") {
            const auto crates = c.control[problem.control_space().field_index("crates")].leaf();
            std::vector<int> eligible;
            for (int i : floor) {
                if (blocked_sides(tiles, width, height, i % width, i / width) <= 1) eligible.push_back(i);
            }
            for (std::int64_t k = 0; k < crates; ++k) {
                const int cell = take(eligible, rng);
                if (cell < 0) break;
                remove_cell(floor, cell);
                tiles[static_cast<std::size_t>(cell)] = problems::sokoban::crate;
                const int target = take(floor, rng);
                if (target >= 0) {
                    remove_cell(eligible, target);
                    tiles[static_cast<std::size_t>(target)] = problems::sokoban::target;
                }
            }
            const int player = take(floor, rng);
            if (player >= 0) tiles[static_cast<std::size_t>(player)] = problems::sokoban::player;
        } else {
            const auto& params = problem.params();
            const auto enemies = rng.uniform_int(params.get_int("enemy_min"), params.get_int("enemy_max"));
            const auto place = [&](int symbol) {
                const int cell = take(floor, rng);
                if (cell >= 0) tiles[static_cast<std::size_t>(cell)] = symbol;
            };
            place(problems::zelda::player);
            place(problems::zelda::key);
            place(problems::zelda::door);
            for (std::int64_t k = 0; k < enemies; ++k) place(problems::zelda::enemy);
        }
    }
    c.content = problems::make_grid(tiles, width, height);
    return c;
}

std::vector<Chromosome> run_constructive(const Problem& problem, std::size_t count, FitnessKind kind, Rng& rng) {
    std::vector<Chromosome> batch;
    batch.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        batch.push_back(construct(problem, rng));
        batch.back().birth = i;
    }
    score_pool(problem, kind, batch);
    summarize(problem, 0, batch);
    return batch;
}

}  // namespace pcgb::generators
