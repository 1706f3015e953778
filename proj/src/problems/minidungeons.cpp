#include "common.hpp"
#include "pcgbench/problems/problems.hpp"
#include "pcgbench/solvers/dungeon.hpp"

namespace pcgb::problems {

namespace {

using detail::grid_tiles;

class MiniDungeonsProblem final : public Problem {
public:
    explicit MiniDungeonsProblem(const VariantParams& p)
        : Problem("minidungeons-v0", p,
                  SpaceDescriptor::grid2d(SpaceDescriptor::discrete(7), static_cast<std::size_t>(p.get_int("width")),
                                          static_cast<std::size_t>(p.get_int("height"))),
                  SpaceDescriptor::record({{"start_x", SpaceDescriptor::range(0, p.get_int("width") - 1)},
                                           {"start_y", SpaceDescriptor::range(0, p.get_int("height") - 1)},
                                           {"exit_x", SpaceDescriptor::range(0, p.get_int("width") - 1)},
                                           {"exit_y", SpaceDescriptor::range(0, p.get_int("height") - 1)},
                                           {"treasures", SpaceDescriptor::range(0, p.get_int("treasure_max"))}})),
          width_(static_cast<int>(p.get_int("width"))),
          height_(static_cast<int>(p.get_int("height"))),
          kill_target_(p.get_int("kill_target")),
          monster_min_(p.get_int("monster_min")),
          potion_min_(p.get_int("potion_min")),
          treasure_min_(p.get_int("treasure_min")) {
        rules_.player_hp = static_cast<int>(p.get_int("player_hp"));
        rules_.monster_damage = static_cast<int>(p.get_int("monster_damage"));
        rules_.potion_heal = static_cast<int>(p.get_int("potion_heal"));
        rules_.max_states = static_cast<std::size_t>(p.get_int("max_states"));
    }

    InfoRecord info(const Value& content) const override {
        const auto tiles = grid_tiles(content, width_, height_);
        InfoRecord info;
        info.set("tiles", detail::to_array(tiles));
        InfoRecord counts;
        const auto starts = detail::count_of(tiles, minidungeons::start);
        const auto exits = detail::count_of(tiles, minidungeons::exit);
        const auto monsters = detail::count_of(tiles, minidungeons::monster);
        const auto potions = detail::count_of(tiles, minidungeons::potion);
        counts.set("start", starts);
        counts.set("exit", exits);
        counts.set("monster", monsters);
        counts.set("potion", potions);
        counts.set("treasure", detail::count_of(tiles, minidungeons::treasure));
        counts.set("wall", detail::count_of(tiles, minidungeons::wall));
        info.set("counts", std::move(counts));
        info.set("components",
                 solvers::connected_components(detail::passable_map(tiles, width_, height_, minidungeons::wall)));

        set_position(info, "start", detail::first_of(tiles, minidungeons::start));
        set_position(info, "exit", detail::first_of(tiles, minidungeons::exit));

        solvers::DungeonResult result;
        // The route is searched from the first start to the first exit; any
        // further start/exit tiles count as floor (the tile subscore already
        // penalizes them).
        if (starts >= 1 && exits >= 1 && monsters + potions <= 128) {
            const int first_start = detail::first_of(tiles, minidungeons::start);
            const int first_exit = detail::first_of(tiles, minidungeons::exit);
            solvers::DungeonLevel level{width_, height_, {}};
            level.tiles.reserve(tiles.size());
            for (std::size_t i = 0; i < tiles.size(); ++i) {
                int t = tiles[i];
                if ((t == minidungeons::start && static_cast<int>(i) != first_start) ||
                    (t == minidungeons::exit && static_cast<int>(i) != first_exit)) {
                    t = minidungeons::floor;
                }
                level.tiles.push_back(static_cast<solvers::DungeonTile>(t));
            }
            result = solvers::solve_dungeon(level, rules_);
        }
        info.set("solvable", std::int64_t{result.solvable ? 1 : 0});
        info.set("exhausted", std::int64_t{result.exhausted ? 1 : 0});
        info.set("steps", result.steps);
        info.set("kills", result.kills);
        info.set("hp_left", result.hp_left);
        info.set("path", solvers::moves_to_string(result.path));
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        const auto& counts = info.get_record("counts");
        const std::int64_t cells = width_ * height_;
        const double tiles = detail::mean_score({
            count_closeness(counts.get_int("start"), 1, 1, cells),
            count_closeness(counts.get_int("exit"), 1, 1, cells),
            count_closeness(counts.get_int("monster"), monster_min_, cells, cells),
            count_closeness(counts.get_int("potion"), potion_min_, cells, cells),
            count_closeness(counts.get_int("treasure"), treasure_min_, cells, cells),
        });
        const bool solvable = info.get_int("solvable") == 1;
        return {tiles, detail::components_score(info.get_int("components")), solvable ? 1.0 : 0.0,
                solvable ? std::min(1.0, static_cast<double>(info.get_int("kills")) / static_cast<double>(kill_target_))
                         : 0.0};
    }

    double diversity(const InfoRecord& a, const InfoRecord& b) const override {
        return detail::scaled_hamming(a.get_array("tiles"), b.get_array("tiles"), 0.3);
    }

    double controllability(const InfoRecord& info, const Value& control) const override {
        const auto& space = control_space();
        const auto field = [&](const char* name) { return detail::control_field(control, space, name); };
        const double sx = detail::coordinate_closeness(info.get_int("start_x"), field("start_x"), width_);
        const double sy = detail::coordinate_closeness(info.get_int("start_y"), field("start_y"), height_);
        const double ex = detail::coordinate_closeness(info.get_int("exit_x"), field("exit_x"), width_);
        const double ey = detail::coordinate_closeness(info.get_int("exit_y"), field("exit_y"), height_);
        const auto target = field("treasures");
        const double tr =
            count_closeness(info.get_record("counts").get_int("treasure"), target, target, width_ * height_);
        return (sx + sy + ex + ey + tr) / 5.0;
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        static const std::vector<TileStyle> palette = {
            {{58, 50, 58}, {}, false},              // floor
            {{150, 135, 120}, {}, false},           // wall
            {{58, 50, 58}, {60, 172, 215}, true},   // start
            {{58, 50, 58}, {255, 255, 255}, true},  // exit
            {{58, 50, 58}, {200, 40, 40}, true},    // monster
            {{58, 50, 58}, {244, 180, 27}, true},   // treasure
            {{58, 50, 58}, {90, 200, 90}, true},    // potion
        };
        return {{"png", encode_png(render_tile_grid(grid_tiles(content, width_, height_), width_, height_, palette)), ""}};
    }

private:
    void set_position(InfoRecord& info, const std::string& prefix, int index) const {
        info.set(prefix + "_x", index < 0 ? -1 : index % width_);
        info.set(prefix + "_y", index < 0 ? -1 : index / width_);
    }

    int width_;
    int height_;
    std::int64_t kill_target_;
    std::int64_t monster_min_;
    std::int64_t potion_min_;
    std::int64_t treasure_min_;
    solvers::DungeonRules rules_;
};

}  // namespace

VariantParams minidungeons_defaults() {
    return VariantParams({{"width", std::int64_t{8}},
                          {"height", std::int64_t{12}},
                          {"kill_target", std::int64_t{12}},
                          {"player_hp", std::int64_t{40}},
                          {"monster_damage", std::int64_t{5}},
                          {"potion_heal", std::int64_t{10}},
                          {"monster_min", std::int64_t{12}},
                          {"potion_min", std::int64_t{2}},
                          {"treasure_min", std::int64_t{0}},
                          {"treasure_max", std::int64_t{5}},
                          {"max_states", std::int64_t{20000}}});
}

std::unique_ptr<Problem> make_minidungeons(const VariantParams& params) {
    return std::make_unique<MiniDungeonsProblem>(params);
}

}  // namespace pcgb::problems
