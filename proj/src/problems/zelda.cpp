#include "common.hpp"
#include "pcgbench/problems/problems.hpp"

namespace pcgb::problems {

namespace {

using detail::grid_tiles;

class ZeldaProblem final : public Problem {
public:
    explicit ZeldaProblem(const VariantParams& p)
        : Problem("zelda-v0", p,
                  SpaceDescriptor::grid2d(SpaceDescriptor::discrete(6), static_cast<std::size_t>(p.get_int("width")),
                                          static_cast<std::size_t>(p.get_int("height"))),
                  SpaceDescriptor::record({{"key_dist", SpaceDescriptor::range(2, p.get_int("width") + p.get_int("height") - 1)},
                                           {"door_dist", SpaceDescriptor::range(2, p.get_int("width") + p.get_int("height") - 1)}})),
          width_(static_cast<int>(p.get_int("width"))),
          height_(static_cast<int>(p.get_int("height"))),
          solution_target_(p.get_int("solution_target")),
          enemy_min_(p.get_int("enemy_min")),
          enemy_max_(p.get_int("enemy_max")),
          control_window_(p.get_int("control_window")) {}

    InfoRecord info(const Value& content) const override {
        const auto tiles = grid_tiles(content, width_, height_);
        const auto map = detail::passable_map(tiles, width_, height_, zelda::solid);
        InfoRecord info;
        info.set("tiles", detail::to_array(tiles));
        InfoRecord counts;
        counts.set("empty", detail::count_of(tiles, zelda::empty));
        counts.set("solid", detail::count_of(tiles, zelda::solid));
        counts.set("player", detail::count_of(tiles, zelda::player));
        counts.set("key", detail::count_of(tiles, zelda::key));
        counts.set("door", detail::count_of(tiles, zelda::door));
        counts.set("enemy", detail::count_of(tiles, zelda::enemy));
        info.set("components", solvers::connected_components(map));
        const int player = detail::first_of(tiles, zelda::player);
        const int key = detail::first_of(tiles, zelda::key);
        const int door = detail::first_of(tiles, zelda::door);
        info.set("player_key", detail::distance_or_zero(map, player, key));
        info.set("key_door", detail::distance_or_zero(map, key, door));
        info.set("counts", std::move(counts));
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        const auto& counts = info.get_record("counts");
        const std::int64_t cells = width_ * height_;
        const double solution = static_cast<double>(info.get_int("player_key") + info.get_int("key_door"));
        return {count_closeness(counts.get_int("player"), 1, 1, cells),
                count_closeness(counts.get_int("key"), 1, 1, cells),
                count_closeness(counts.get_int("door"), 1, 1, cells),
                count_closeness(counts.get_int("enemy"), enemy_min_, enemy_max_, cells),
                detail::components_score(info.get_int("components")),
                std::min(1.0, solution / static_cast<double>(solution_target_))};
    }

    double diversity(const InfoRecord& a, const InfoRecord& b) const override {
        return detail::scaled_hamming(a.get_array("tiles"), b.get_array("tiles"), 0.3);
    }

    double controllability(const InfoRecord& info, const Value& control) const override {
        const auto& space = control_space();
        const auto bounds = space.fields()[0].space.bounds();
        const auto closeness = [&](std::int64_t measured, std::int64_t target) {
            return window_closeness(static_cast<double>(measured), static_cast<double>(target),
                                    static_cast<double>(target + control_window_), static_cast<double>(bounds.lo),
                                    static_cast<double>(bounds.hi));
        };
        return 0.5 * (closeness(info.get_int("player_key"), detail::control_field(control, space, "key_dist")) +
                      closeness(info.get_int("key_door"), detail::control_field(control, space, "door_dist")));
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        static const std::vector<TileStyle> palette = {
            {{71, 45, 60}, {}, false},        // empty
            {{207, 198, 184}, {}, false},     // solid
            {{71, 45, 60}, {60, 172, 215}, true},   // player
            {{71, 45, 60}, {244, 180, 27}, true},   // key
            {{71, 45, 60}, {122, 68, 74}, true},    // door
            {{71, 45, 60}, {230, 72, 46}, true},    // enemy
        };
        return {{"png", encode_png(render_tile_grid(grid_tiles(content, width_, height_), width_, height_, palette)), ""}};
    }

private:
    int width_;
    int height_;
    std::int64_t solution_target_;
    std::int64_t enemy_min_;
    std::int64_t enemy_max_;
    std::int64_t control_window_;
};

}  // namespace

VariantParams zelda_defaults() {
    return VariantParams({{"width", std::int64_t{11}},
                          {"height", std::int64_t{7}},
                          {"solution_target", std::int64_t{16}},
                          {"enemy_min", std::int64_t{1}},
                          {"enemy_max", std::int64_t{3}},
                          {"control_window", std::int64_t{4}}});
}

std::unique_ptr<Problem> make_zelda(const VariantParams& params) { return std::make_unique<ZeldaProblem>(params); }

}  // namespace pcgb::problems
