#include "pcgbench/solvers/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcgb::solvers {

namespace {
constexpr Move kMoves[] = {Move::up, Move::down, Move::left, Move::right};
}

char move_char(Move m) {
    switch (m) {
        case Move::up: return 'U';
        case Move::down: return 'D';
        case Move::left: return 'L';
        case Move::right: return 'R';
    }
    return '?';
}

std::string moves_to_string(const std::vector<Move>& moves) {
    std::string out;
    out.reserve(moves.size());
    for (auto m : moves) out.push_back(move_char(m));
    return out;
}

Cell step(Cell c, Move m) {
    switch (m) {
        case Move::up: return {c.x, c.y - 1};
        case Move::down: return {c.x, c.y + 1};
        case Move::left: return {c.x - 1, c.y};
        case Move::right: return {c.x + 1, c.y};
    }
    return c;
}

GridMap::GridMap(int width, int height, bool passable)
    : width_(width), height_(height), passable_(static_cast<std::size_t>(width * height), passable ? 1 : 0) {
    if (width < 1 || height < 1) throw std::invalid_argument("GridMap: dimensions must be positive");
}

GridMap::GridMap(int width, int height, std::vector<std::uint8_t> passable)
    : width_(width), height_(height), passable_(std::move(passable)) {
    if (width < 1 || height < 1) throw std::invalid_argument("GridMap: dimensions must be positive");
    if (passable_.size() != static_cast<std::size_t>(width * height)) {
        throw std::invalid_argument("GridMap: passable size does not match dimensions");
    }
}

std::size_t GridMap::passable_count() const {
    return static_cast<std::size_t>(std::count(passable_.begin(), passable_.end(), std::uint8_t{1}));
}

std::vector<int> bfs_distances(const GridMap& map, Cell src) {
    std::vector<int> dist(map.size(), -1);
    if (!map.passable(src)) return dist;
    std::vector<int> queue;
    queue.reserve(map.size());
    dist[map.index(src)] = 0;
    queue.push_back(static_cast<int>(map.index(src)));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Cell c = map.cell(static_cast<std::size_t>(queue[head]));
        const int d = dist[static_cast<std::size_t>(queue[head])];
        for (auto m : kMoves) {
            const Cell n = step(c, m);
            if (!map.passable(n)) continue;
            const auto ni = map.index(n);
            if (dist[ni] >= 0) continue;
            dist[ni] = d + 1;
            queue.push_back(static_cast<int>(ni));
        }
    }
    return dist;
}

PathResult shortest_path(const GridMap& map, Cell src, Cell dst) {
    if (!map.in_bounds(src) || !map.in_bounds(dst)) throw std::out_of_range("shortest_path: cell out of bounds");
    if (src == dst) return {true, 0, {}};
    if (!map.passable(src) || !map.passable(dst)) return {};
    // BFS from the target so the path can be read forward greedily.
    const auto dist = bfs_distances(map, dst);
    const int total = dist[map.index(src)];
    if (total < 0) return {};
    PathResult out{true, total, {}};
    out.actions.reserve(static_cast<std::size_t>(total));
    Cell c = src;
    while (!(c == dst)) {
        const int d = dist[map.index(c)];
        for (auto m : kMoves) {
            const Cell n = step(c, m);
            if (map.passable(n) && dist[map.index(n)] == d - 1) {
                out.actions.push_back(m);
                c = n;
                break;
            }
        }
    }
    return out;
}

int graph_diameter(const GridMap& map) {
    const std::size_t n = map.size();
    const int w = map.width();
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    int best = -1;
    for (std::size_t s = 0; s < n; ++s) {
        if (!map.passable(map.cell(s))) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0;
        std::size_t tail = 0;
        dist[s] = 0;
        queue[tail++] = static_cast<int>(s);
        int far = 0;
        while (head < tail) {
            const int i = queue[head++];
            const int d = dist[static_cast<std::size_t>(i)];
            far = d;
            const Cell c = map.cell(static_cast<std::size_t>(i));
            const int neighbors[4] = {c.y > 0 ? i - w : -1, c.y + 1 < map.height() ? i + w : -1,
                                      c.x > 0 ? i - 1 : -1, c.x + 1 < w ? i + 1 : -1};
            for (int ni : neighbors) {
                if (ni < 0) continue;
                const auto u = static_cast<std::size_t>(ni);
                if (dist[u] >= 0 || !map.passable(map.cell(u))) continue;
                dist[u] = d + 1;
                queue[tail++] = ni;
            }
        }
        best = std::max(best, far);
    }
    if (best < 0) throw std::invalid_argument("graph_diameter: map has no passable cell");
    return best;
}

int connected_components(const GridMap& map) {
    std::vector<std::uint8_t> seen(map.size(), 0);
    std::vector<std::size_t> stack;
    int count = 0;
    for (std::size_t s = 0; s < map.size(); ++s) {
        if (seen[s] || !map.passable(map.cell(s))) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Cell c = map.cell(stack.back());
            stack.pop_back();
            for (auto m : kMoves) {
                const Cell n = step(c, m);
                if (!map.passable(n)) continue;
                const auto ni = map.index(n);
                if (seen[ni]) continue;
                seen[ni] = 1;
                stack.push_back(ni);
            }
        }
    }
    return count;
}

}  // namespace pcgb::solvers
