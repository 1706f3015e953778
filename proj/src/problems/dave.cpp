#include "common.hpp"
#include "pcgbench/problems/problems.hpp"
#include "pcgbench/solvers/platformer.hpp"

namespace pcgb::problems {

namespace {

using detail::grid_tiles;

// Levels with more diamonds are reported unsolved rather than searched.
constexpr std::int64_t kSolverMaxDiamonds = 8;

class DaveProblem final : public Problem {
public:
    explicit DaveProblem(const VariantParams& p)
        : Problem("dave-v0", p,
                  SpaceDescriptor::grid2d(SpaceDescriptor::discrete(6), static_cast<std::size_t>(p.get_int("width")),
                                          static_cast<std::size_t>(p.get_int("height"))),
                  SpaceDescriptor::record({{"start_x", SpaceDescriptor::range(0, p.get_int("width") - 1)},
                                           {"start_y", SpaceDescriptor::range(0, p.get_int("height") - 1)},
                                           {"exit_x", SpaceDescriptor::range(0, p.get_int("width") - 1)},
                                           {"exit_y", SpaceDescriptor::range(0, p.get_int("height") - 1)},
                                           {"diamonds", SpaceDescriptor::range(p.get_int("diamond_min"), p.get_int("diamond_max"))}})),
          width_(static_cast<int>(p.get_int("width"))),
          height_(static_cast<int>(p.get_int("height"))),
          min_jumps_(p.get_int("min_jumps")),
          diamond_min_(p.get_int("diamond_min")),
          spike_max_(p.get_int("spike_max")) {
        physics_.jump_height = static_cast<int>(p.get_int("jump_height"));
    }

    InfoRecord info(const Value& content) const override {
        const auto tiles = grid_tiles(content, width_, height_);
        InfoRecord info;
        info.set("tiles", detail::to_array(tiles));
        const auto starts = detail::count_of(tiles, dave::start);
        const auto exits = detail::count_of(tiles, dave::exit);
        const auto diamonds = detail::count_of(tiles, dave::diamond);
        InfoRecord counts;
        counts.set("start", starts);
        counts.set("exit", exits);
        counts.set("diamond", diamonds);
        counts.set("spike", detail::count_of(tiles, dave::spike));
        counts.set("solid", detail::count_of(tiles, dave::solid));
        info.set("counts", std::move(counts));

        const int start = detail::first_of(tiles, dave::start);
        const int exit = detail::first_of(tiles, dave::exit);
        info.set("start_x", start < 0 ? -1 : start % width_);
        info.set("start_y", start < 0 ? -1 : start / width_);
        info.set("exit_x", exit < 0 ? -1 : exit % width_);
        info.set("exit_y", exit < 0 ? -1 : exit / width_);

        // Only the first start and the first exit are used; further ones
        // count as empty (the tile subscore already penalizes them).
        solvers::PlatformerLevel level{width_, height_, {}};
        level.tiles.reserve(tiles.size());
        for (std::size_t i = 0; i < tiles.size(); ++i) {
            int t = tiles[i];
            if ((t == dave::start && static_cast<int>(i) != start) || (t == dave::exit && static_cast<int>(i) != exit)) {
                t = dave::empty;
            }
            level.tiles.push_back(static_cast<solvers::PlatformerTile>(t));
        }

        const auto reach = solvers::reachable_cells(level, physics_);
        std::int64_t reachable_diamonds = 0;
        for (std::size_t i = 0; i < tiles.size(); ++i) {
            if (tiles[i] == dave::diamond && reach[i] != 0) ++reachable_diamonds;
        }
        info.set("reachable_diamonds", reachable_diamonds);
        info.set("exit_reachable", std::int64_t{exit >= 0 && reach[static_cast<std::size_t>(exit)] != 0 ? 1 : 0});

        std::int64_t solvable = 0;
        std::int64_t jumps = 0;
        std::string actions;
        if (starts >= 1 && exits >= 1 && diamonds <= kSolverMaxDiamonds) {
            if (auto trace = solvers::solve_platformer(level, physics_)) {
                solvable = 1;
                jumps = trace->jumps;
                for (auto a : trace->actions) actions.push_back(static_cast<char>('0' + static_cast<int>(a)));
            }
        }
        info.set("solvable", solvable);
        info.set("jumps", jumps);
        info.set("actions", actions);
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        const auto& counts = info.get_record("counts");
        const std::int64_t cells = width_ * height_;
        const double tiles = detail::mean_score({
            count_closeness(counts.get_int("start"), 1, 1, cells),
            count_closeness(counts.get_int("exit"), 1, 1, cells),
            count_closeness(counts.get_int("diamond"), diamond_min_, cells, cells),
            count_closeness(counts.get_int("spike"), 0, spike_max_, cells),
        });
        const bool solvable = info.get_int("solvable") == 1;
        const auto diamonds = counts.get_int("diamond");
        double reach = 1.0;
        if (diamonds > 0) {
            const auto r = info.get_int("reachable_diamonds");
            reach = r == diamonds ? 1.0
                                  : std::min(std::nextafter(1.0, 0.0),
                                             static_cast<double>(r) / static_cast<double>(diamonds));
        }
        return {tiles, solvable ? 1.0 : 0.0,
                solvable ? std::min(1.0, static_cast<double>(info.get_int("jumps")) / static_cast<double>(min_jumps_))
                         : 0.0,
                reach};
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
        const auto target = field("diamonds");
        const double dm =
            count_closeness(info.get_record("counts").get_int("diamond"), target, target, width_ * height_);
        return (sx + sy + ex + ey + dm) / 5.0;
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        static const std::vector<TileStyle> palette = {
            {{20, 20, 40}, {}, false},               // empty
            {{170, 80, 50}, {}, false},              // solid
            {{20, 20, 40}, {220, 220, 220}, true},   // spike
            {{20, 20, 40}, {80, 220, 240}, true},    // diamond
            {{20, 20, 40}, {240, 200, 60}, true},    // start
            {{20, 20, 40}, {90, 200, 90}, true},     // exit
        };
        return {{"png", encode_png(render_tile_grid(grid_tiles(content, width_, height_), width_, height_, palette)), ""}};
    }

private:
    int width_;
    int height_;
    std::int64_t min_jumps_;
    std::int64_t diamond_min_;
    std::int64_t spike_max_;
    solvers::PlatformerPhysics physics_;
};

}  // namespace

VariantParams dave_defaults() {
    return VariantParams({{"width", std::int64_t{11}},
                          {"height", std::int64_t{7}},
                          {"min_jumps", std::int64_t{2}},
                          {"diamond_min", std::int64_t{1}},
                          {"diamond_max", std::int64_t{6}},
                          {"spike_max", std::int64_t{8}},
                          {"jump_height", std::int64_t{2}}});
}

std::unique_ptr<Problem> make_dave(const VariantParams& params) { return std::make_unique<DaveProblem>(params); }

}  // namespace pcgb::problems
