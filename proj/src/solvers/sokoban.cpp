#include "pcgbench/solvers/sokoban.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <tuple>
#include <queue>
#include <unordered_map>

namespace pcgb::solvers {

namespace {

constexpr Move kMoves[] = {Move::up, Move::down, Move::left, Move::right};

struct StateKey {
    std::uint64_t crates;
    std::uint8_t player;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t h = k.crates * 0x9E3779B97F4A7C15ULL;
        h ^= (static_cast<std::uint64_t>(k.player) + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct Node {
    StateKey key;
    int g;
    int parent;
    Move move;
};

struct Board {
    int width;
    int height;
    std::vector<std::uint8_t> wall;
    std::vector<std::uint8_t> target;
    std::vector<std::uint8_t> dead;  // non-target corner cells
    std::vector<int> targets;

    [[nodiscard]] bool open(int x, int y) const {
        return x >= 0 && y >= 0 && x < width && y < height && !wall[static_cast<std::size_t>(y * width + x)];
    }
};

Board make_board(const SokobanLevel& level, StateKey& start) {
    if (level.width < 1 || level.height < 1 ||
        level.tiles.size() != static_cast<std::size_t>(level.width * level.height)) {
        throw SokobanError("sokoban: tile count does not match dimensions");
    }
    if (level.width * level.height > 64) throw SokobanError("sokoban: levels are limited to 64 cells");
    Board b{level.width, level.height, {}, {}, {}, {}};
    const auto n = level.tiles.size();
    b.wall.assign(n, 0);
    b.target.assign(n, 0);
    b.dead.assign(n, 0);
    int players = 0;
    int crates = 0;
    start = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        switch (level.tiles[i]) {
            case SokobanTile::wall: b.wall[i] = 1; break;
            case SokobanTile::target: b.target[i] = 1; break;
            case SokobanTile::crate:
                start.crates |= 1ULL << i;
                ++crates;
                break;
            case SokobanTile::crate_on_target:
                start.crates |= 1ULL << i;
                b.target[i] = 1;
                ++crates;
                break;
            case SokobanTile::player:
                start.player = static_cast<std::uint8_t>(i);
                ++players;
                break;
            case SokobanTile::player_on_target:
                start.player = static_cast<std::uint8_t>(i);
                b.target[i] = 1;
                ++players;
                break;
            case SokobanTile::floor: break;
        }
    }
    if (players != 1) throw SokobanError("sokoban: level needs exactly one player");
    for (std::size_t i = 0; i < n; ++i) {
        if (b.target[i]) b.targets.push_back(static_cast<int>(i));
    }
    if (crates != static_cast<int>(b.targets.size())) throw SokobanError("sokoban: crate count must equal target count");
    for (int y = 0; y < b.height; ++y) {
        for (int x = 0; x < b.width; ++x) {
            const auto i = static_cast<std::size_t>(y * b.width + x);
            if (b.wall[i] || b.target[i]) continue;
            // Blocked on one vertical and one horizontal side: a crate here can never move again.
            const bool vertical = !b.open(x, y - 1) || !b.open(x, y + 1);
            const bool horizontal = !b.open(x - 1, y) || !b.open(x + 1, y);
            b.dead[i] = (vertical && horizontal) ? 1 : 0;
        }
    }
    return b;
}

int heuristic(const Board& b, std::uint64_t crates) {
    int h = 0;
    while (crates) {
        const int c = __builtin_ctzll(crates);
        crates &= crates - 1;
        const int cx = c % b.width;
        const int cy = c / b.width;
        int best = 1 << 20;
        for (int t : b.targets) {
            const int d = std::abs(cx - t % b.width) + std::abs(cy - t / b.width);
            best = std::min(best, d);
        }
        h += best;
    }
    return h;
}

bool all_on_targets(const Board& b, std::uint64_t crates) {
    for (int t : b.targets) {
        if (!(crates & (1ULL << t))) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<Move>> solve_sokoban(const SokobanLevel& level) {
    StateKey start{};
    const Board b = make_board(level, start);
    if (all_on_targets(b, start.crates)) return std::vector<Move>{};

    std::vector<Node> nodes;
    std::unordered_map<StateKey, int, StateKeyHash> best_g;
    // (f, -g, insertion order) so ties favor deeper nodes, then FIFO.
    using Entry = std::tuple<int, int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

    nodes.push_back({start, 0, -1, Move::up});
    best_g[start] = 0;
    open.emplace(heuristic(b, start.crates), 0, 0);

    while (!open.empty()) {
        const auto [f, neg_g, id] = open.top();
        open.pop();
        const Node node = nodes[static_cast<std::size_t>(id)];
        if (best_g[node.key] < node.g) continue;
        if (all_on_targets(b, node.key.crates)) {
            std::vector<Move> path;
            for (int i = id; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
                path.push_back(nodes[static_cast<std::size_t>(i)].move);
            }
            return std::vector<Move>(path.rbegin(), path.rend());
        }
        const int px = node.key.player % b.width;
        const int py = node.key.player / b.width;
        for (auto m : kMoves) {
            const Cell n = step({px, py}, m);
            if (!b.open(n.x, n.y)) continue;
            const int ni = n.y * b.width + n.x;
            StateKey next{node.key.crates, static_cast<std::uint8_t>(ni)};
            if (node.key.crates & (1ULL << ni)) {
                const Cell beyond = step(n, m);
                if (!b.open(beyond.x, beyond.y)) continue;
                const int bi = beyond.y * b.width + beyond.x;
                if (node.key.crates & (1ULL << bi)) continue;
                if (b.dead[static_cast<std::size_t>(bi)]) continue;
                next.crates = (node.key.crates & ~(1ULL << ni)) | (1ULL << bi);
            }
            const int g = node.g + 1;
            auto it = best_g.find(next);
            if (it != best_g.end() && it->second <= g) continue;
            best_g[next] = g;
            const int nid = static_cast<int>(nodes.size());
            nodes.push_back({next, g, id, m});
            open.emplace(g + heuristic(b, next.crates), -g, nid);
        }
    }
    return std::nullopt;
}

std::optional<SokobanLevel> replay_sokoban(const SokobanLevel& level, const std::vector<Move>& moves) {
    SokobanLevel cur = level;
    const auto idx = [&](Cell c) { return static_cast<std::size_t>(c.y * cur.width + c.x); };
    const auto inside = [&](Cell c) { return c.x >= 0 && c.y >= 0 && c.x < cur.width && c.y < cur.height; };
    const auto is_crate = [](SokobanTile t) { return t == SokobanTile::crate || t == SokobanTile::crate_on_target; };
    const auto is_target = [](SokobanTile t) {
        return t == SokobanTile::target || t == SokobanTile::crate_on_target || t == SokobanTile::player_on_target;
    };
    Cell player{-1, -1};
    for (int y = 0; y < cur.height; ++y) {
        for (int x = 0; x < cur.width; ++x) {
            const auto t = cur.at(x, y);
            if (t == SokobanTile::player || t == SokobanTile::player_on_target) player = {x, y};
        }
    }
    if (player.x < 0) return std::nullopt;
    for (auto m : moves) {
        const Cell n = step(player, m);
        if (!inside(n) || cur.tiles[idx(n)] == SokobanTile::wall) return std::nullopt;
        if (is_crate(cur.tiles[idx(n)])) {
            const Cell beyond = step(n, m);
            if (!inside(beyond) || cur.tiles[idx(beyond)] == SokobanTile::wall || is_crate(cur.tiles[idx(beyond)])) {
                return std::nullopt;
            }
            cur.tiles[idx(beyond)] = is_target(cur.tiles[idx(beyond)]) ? SokobanTile::crate_on_target : SokobanTile::crate;
            cur.tiles[idx(n)] = is_target(cur.tiles[idx(n)]) ? SokobanTile::target : SokobanTile::floor;
        }
        cur.tiles[idx(player)] = is_target(cur.tiles[idx(player)]) ? SokobanTile::target : SokobanTile::floor;
        cur.tiles[idx(n)] = is_target(cur.tiles[idx(n)]) ? SokobanTile::player_on_target : SokobanTile::player;
        player = n;
    }
    return cur;
}

bool sokoban_solved(const SokobanLevel& level) {
    for (auto t : level.tiles) {
        if (t == SokobanTile::crate) return false;
    }
    return true;
}

}  // namespace pcgb::solvers
