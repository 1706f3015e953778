#include "pcgbench/solvers/dungeon.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pcgb::solvers {

namespace {

constexpr Move kMoves[] = {Move::up, Move::down, Move::left, Move::right};

using Mask = unsigned __int128;

struct Key {
    Mask consumed;
    int cell;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        const auto lo = static_cast<std::uint64_t>(k.consumed);
        const auto hi = static_cast<std::uint64_t>(k.consumed >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6));
        h ^= static_cast<std::uint64_t>(k.cell) * 0xBF58476D1CE4E5B9ULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

struct Node {
    Key key;
    int hp;
    int kills;
    int potions;
    int depth;
    int parent;
    Move move;
};

}  // namespace

DungeonResult solve_dungeon(const DungeonLevel& level, const DungeonRules& rules) {
    const auto n = level.tiles.size();
    if (level.width < 1 || level.height < 1 || n != static_cast<std::size_t>(level.width * level.height)) {
        throw std::invalid_argument("dungeon: tile count does not match dimensions");
    }
    std::vector<int> object(n, -1);
    int objects = 0;
    int start = -1;
    int exit = -1;
    int starts = 0;
    int exits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        switch (level.tiles[i]) {
            case DungeonTile::monster:
            case DungeonTile::potion: object[i] = objects++; break;
            case DungeonTile::start:
                start = static_cast<int>(i);
                ++starts;
                break;
            case DungeonTile::exit:
                exit = static_cast<int>(i);
                ++exits;
                break;
            default: break;
        }
    }
    if (starts != 1 || exits != 1) throw std::invalid_argument("dungeon: needs exactly one start and one exit");
    if (objects > 128) throw std::invalid_argument("dungeon: at most 128 monsters and potions are supported");

    DungeonResult result;
    std::vector<Node> nodes;
    std::unordered_map<Key, int, KeyHash> seen;
    nodes.push_back({{0, start}, rules.player_hp, 0, 0, 0, -1, Move::up});
    seen.emplace(nodes[0].key, 0);
    int best_exit = -1;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const Node cur = nodes[head];
        if (best_exit >= 0 && cur.depth + 1 > nodes[static_cast<std::size_t>(best_exit)].depth) break;
        const Cell c{cur.key.cell % level.width, cur.key.cell / level.width};
        for (auto m : kMoves) {
            const Cell nc = step(c, m);
            if (nc.x < 0 || nc.y < 0 || nc.x >= level.width || nc.y >= level.height) continue;
            const int ni = nc.y * level.width + nc.x;
            const auto tile = level.tiles[static_cast<std::size_t>(ni)];
            if (tile == DungeonTile::wall) continue;
            Node next{{cur.key.consumed, ni}, cur.hp, cur.kills, cur.potions, cur.depth + 1, static_cast<int>(head), m};
            const int obj = object[static_cast<std::size_t>(ni)];
            if (obj >= 0 && !(cur.key.consumed & (Mask{1} << obj))) {
                next.key.consumed |= Mask{1} << obj;
                if (tile == DungeonTile::monster) {
                    next.hp -= rules.monster_damage;
                    ++next.kills;
                } else {
                    next.hp += rules.potion_heal;
                    ++next.potions;
                }
            }
            if (next.hp <= 0) continue;
            if (seen.count(next.key)) continue;
            seen.emplace(next.key, static_cast<int>(nodes.size()));
            nodes.push_back(next);
            if (ni == exit) {
                // Same-length arrivals: keep the one with the most kills.
                if (best_exit < 0 || next.kills > nodes[static_cast<std::size_t>(best_exit)].kills) {
                    best_exit = static_cast<int>(nodes.size()) - 1;
                }
                continue;
            }
            if (nodes.size() >= rules.max_states && best_exit < 0) {
                result.exhausted = true;
                result.states = nodes.size();
                return result;
            }
        }
    }
    result.states = nodes.size();
    if (best_exit < 0) return result;
    const Node& end = nodes[static_cast<std::size_t>(best_exit)];
    result.solvable = true;
    result.kills = end.kills;
    result.potions = end.potions;
    result.hp_left = end.hp;
    for (int i = best_exit; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
        result.path.push_back(nodes[static_cast<std::size_t>(i)].move);
    }
    std::reverse(result.path.begin(), result.path.end());
    result.steps = static_cast<int>(result.path.size());
    return result;
}

DungeonReplay replay_dungeon(const DungeonLevel& level, const DungeonRules& rules, const std::vector<Move>& path) {
    DungeonReplay out;
    int start = -1;
    for (std::size_t i = 0; i < level.tiles.size(); ++i) {
        if (level.tiles[i] == DungeonTile::start) start = static_cast<int>(i);
    }
    if (start < 0) return out;
    std::vector<std::uint8_t> consumed(level.tiles.size(), 0);
    Cell c{start % level.width, start / level.width};
    int hp = rules.player_hp;
    for (auto m : path) {
        c = step(c, m);
        if (c.x < 0 || c.y < 0 || c.x >= level.width || c.y >= level.height) return out;
        const auto i = static_cast<std::size_t>(c.y * level.width + c.x);
        if (level.tiles[i] == DungeonTile::wall) return out;
        if (!consumed[i] && level.tiles[i] == DungeonTile::monster) {
            hp -= rules.monster_damage;
            ++out.kills;
            consumed[i] = 1;
        } else if (!consumed[i] && level.tiles[i] == DungeonTile::potion) {
            hp += rules.potion_heal;
            consumed[i] = 1;
        }
        if (hp <= 0) return out;
    }
    out.alive = true;
    out.hp = hp;
    out.at_exit = level.tiles[static_cast<std::size_t>(c.y * level.width + c.x)] == DungeonTile::exit;
    return out;
}

}  // namespace pcgb::solvers
