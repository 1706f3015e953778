#include "pcgbench/solvers/platformer.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace pcgb::solvers {

namespace {

constexpr PlatformerAction kActions[] = {PlatformerAction::idle,      PlatformerAction::left,
                                         PlatformerAction::right,     PlatformerAction::jump,
                                         PlatformerAction::jump_left, PlatformerAction::jump_right};

struct Prepared {
    const PlatformerLevel* level;
    std::vector<int> diamond_bit;  // -1 where no diamond
    int diamond_count = 0;
    int start = -1;
    int exit = -1;
    int starts = 0;
    int exits = 0;

    explicit Prepared(const PlatformerLevel& l) : level(&l), diamond_bit(l.tiles.size(), -1) {
        if (l.width < 1 || l.height < 1 || l.tiles.size() != static_cast<std::size_t>(l.width * l.height)) {
            throw std::invalid_argument("platformer: tile count does not match dimensions");
        }
        for (std::size_t i = 0; i < l.tiles.size(); ++i) {
            switch (l.tiles[i]) {
                case PlatformerTile::diamond: diamond_bit[i] = diamond_count++; break;
                case PlatformerTile::start:
                    start = static_cast<int>(i);
                    ++starts;
                    break;
                case PlatformerTile::exit:
                    exit = static_cast<int>(i);
                    ++exits;
                    break;
                default: break;
            }
        }
    }

    [[nodiscard]] bool solid(int x, int y) const {
        if (x < 0 || y < 0 || x >= level->width || y >= level->height) return true;
        return level->at(x, y) == PlatformerTile::solid;
    }

    // Returns false when the player dies on the cell.
    bool enter(int x, int y, PlatformerState& s) const {
        const auto i = static_cast<std::size_t>(y * level->width + x);
        if (level->tiles[i] == PlatformerTile::spike) return false;
        if (diamond_bit[i] >= 0) s.diamonds |= 1U << diamond_bit[i];
        return true;
    }

    [[nodiscard]] std::optional<PlatformerState> step(const PlatformerPhysics& physics, PlatformerState s,
                                                      PlatformerAction a) const {
        const bool supported = solid(s.x, s.y + 1);
        if (is_jump(a)) {
            if (!supported || s.rise > 0) return std::nullopt;
            s.rise = physics.jump_height;
        }
        int dx = 0;
        if (a == PlatformerAction::left || a == PlatformerAction::jump_left) dx = -1;
        if (a == PlatformerAction::right || a == PlatformerAction::jump_right) dx = 1;
        if (dx != 0 && !solid(s.x + dx, s.y)) {
            s.x += dx;
            if (!enter(s.x, s.y, s)) return std::nullopt;
        }
        if (s.rise > 0) {
            if (!solid(s.x, s.y - 1)) {
                s.y -= 1;
                s.rise -= 1;
                if (!enter(s.x, s.y, s)) return std::nullopt;
            } else {
                s.rise = 0;
            }
        } else if (!solid(s.x, s.y + 1)) {
            s.y += 1;
            if (!enter(s.x, s.y, s)) return std::nullopt;
        }
        return s;
    }

    [[nodiscard]] PlatformerState initial() const {
        PlatformerState s{start % level->width, start / level->width, 0, 0};
        return s;
    }

    [[nodiscard]] std::uint32_t all_diamonds() const {
        return diamond_count == 0 ? 0U : static_cast<std::uint32_t>((1ULL << diamond_count) - 1);
    }

    [[nodiscard]] bool finished(const PlatformerState& s) const {
        return s.y * level->width + s.x == exit && s.diamonds == all_diamonds();
    }
};

}  // namespace

bool is_jump(PlatformerAction a) {
    return a == PlatformerAction::jump || a == PlatformerAction::jump_left || a == PlatformerAction::jump_right;
}

std::optional<PlatformerState> platformer_step(const PlatformerLevel& level, const PlatformerPhysics& physics,
                                               const PlatformerState& state, PlatformerAction action) {
    const Prepared p(level);
    return p.step(physics, state, action);
}

std::optional<PlatformerTrace> solve_platformer(const PlatformerLevel& level, const PlatformerPhysics& physics) {
    const Prepared p(level);
    if (p.starts != 1 || p.exits != 1) throw std::invalid_argument("platformer: needs exactly one start and one exit");
    if (p.diamond_count > 16) throw std::invalid_argument("platformer: at most 16 diamonds are supported");

    const int cells = level.width * level.height;
    const int phases = physics.jump_height + 1;
    const auto state_id = [&](const PlatformerState& s) {
        return ((static_cast<std::size_t>(s.diamonds) * static_cast<std::size_t>(phases) +
                 static_cast<std::size_t>(s.rise)) *
                    static_cast<std::size_t>(cells)) +
               static_cast<std::size_t>(s.y * level.width + s.x);
    };
    const std::size_t total = (static_cast<std::size_t>(p.all_diamonds()) + 1) * static_cast<std::size_t>(phases) *
                              static_cast<std::size_t>(cells);

    struct Label {
        int steps = -1;
        int jumps = 0;
        std::int64_t parent = -1;
        PlatformerAction action = PlatformerAction::idle;
    };
    std::vector<Label> labels(total);
    std::vector<PlatformerState> states(total);
    using Entry = std::tuple<int, int, std::size_t>;  // (steps, jumps, id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

    PlatformerState s0 = p.initial();
    // Entering the start tile can already collect nothing (start is its own tile).
    const auto id0 = state_id(s0);
    labels[id0] = {0, 0, -1, PlatformerAction::idle};
    states[id0] = s0;
    open.emplace(0, 0, id0);
    while (!open.empty()) {
        const auto [steps, jumps, id] = open.top();
        open.pop();
        const Label cur = labels[id];
        if (cur.steps != steps || cur.jumps != jumps) continue;
        const PlatformerState s = states[id];
        if (p.finished(s)) {
            PlatformerTrace trace;
            trace.jumps = jumps;
            trace.diamonds = p.diamond_count;
            for (std::int64_t i = static_cast<std::int64_t>(id); labels[static_cast<std::size_t>(i)].parent >= 0;
                 i = labels[static_cast<std::size_t>(i)].parent) {
                trace.actions.push_back(labels[static_cast<std::size_t>(i)].action);
            }
            std::reverse(trace.actions.begin(), trace.actions.end());
            return trace;
        }
        for (auto a : kActions) {
            const auto next = p.step(physics, s, a);
            if (!next) continue;
            const auto nid = state_id(*next);
            const int ns = steps + 1;
            const int nj = jumps + (is_jump(a) ? 1 : 0);
            auto& label = labels[nid];
            if (label.steps >= 0 && std::tie(label.steps, label.jumps) <= std::tie(ns, nj)) continue;
            label = {ns, nj, static_cast<std::int64_t>(id), a};
            states[nid] = *next;
            open.emplace(ns, nj, nid);
        }
    }
    return std::nullopt;
}

std::vector<std::uint8_t> reachable_cells(const PlatformerLevel& level, const PlatformerPhysics& physics) {
    const Prepared p(level);
    std::vector<std::uint8_t> out(level.tiles.size(), 0);
    if (p.starts != 1) return out;
    const int cells = level.width * level.height;
    const int phases = physics.jump_height + 1;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(cells * phases), 0);
    std::vector<PlatformerState> queue{p.initial()};
    seen[static_cast<std::size_t>(p.start)] = 1;
    out[static_cast<std::size_t>(p.start)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        PlatformerState s = queue[head];
        for (auto a : kActions) {
            auto next = p.step(physics, s, a);
            if (!next) continue;
            next->diamonds = 0;
            const auto cell = static_cast<std::size_t>(next->y * level.width + next->x);
            const auto id = static_cast<std::size_t>(next->rise) * static_cast<std::size_t>(cells) + cell;
            if (seen[id]) continue;
            seen[id] = 1;
            out[cell] = 1;
            // A horizontal move passes through (x+dx, y) before the vertical step.
            queue.push_back(*next);
        }
    }
    // Cells only touched mid-step (moved sideways, then fell/rose) are also visited.
    std::vector<std::uint8_t> swept = out;
    for (const auto& s : queue) {
        for (auto a : kActions) {
            int dx = 0;
            if (a == PlatformerAction::left || a == PlatformerAction::jump_left) dx = -1;
            if (a == PlatformerAction::right || a == PlatformerAction::jump_right) dx = 1;
            if (dx == 0 || !p.step(physics, s, a)) continue;
            const int nx = s.x + dx;
            if (!p.solid(nx, s.y)) swept[static_cast<std::size_t>(s.y * level.width + nx)] = 1;
        }
    }
    return swept;
}

PlatformerReplay replay_platformer(const PlatformerLevel& level, const PlatformerPhysics& physics,
                                   const std::vector<PlatformerAction>& actions) {
    const Prepared p(level);
    PlatformerReplay out;
    if (p.starts != 1 || p.exits != 1) return out;
    PlatformerState s = p.initial();
    for (auto a : actions) {
        const auto next = p.step(physics, s, a);
        if (!next) return out;
        if (is_jump(a)) ++out.jumps;
        s = *next;
    }
    out.valid = true;
    out.diamonds = std::popcount(s.diamonds);
    out.finished = p.finished(s);
    return out;
}

}  // namespace pcgb::solvers
