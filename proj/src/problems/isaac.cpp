#include "common.hpp"
#include "pcgbench/problems/problems.hpp"

namespace pcgb::problems {

namespace {

using detail::grid_tiles;

class IsaacProblem final : public Problem {
public:
    explicit IsaacProblem(const VariantParams& p)
        : Problem("isaac-v0", p,
                  SpaceDescriptor::grid2d(SpaceDescriptor::discrete(6), static_cast<std::size_t>(p.get_int("width")),
                                          static_cast<std::size_t>(p.get_int("height"))),
                  SpaceDescriptor::record({{"rooms", SpaceDescriptor::range(p.get_int("room_min"), p.get_int("room_max"))}})),
          width_(static_cast<int>(p.get_int("width"))),
          height_(static_cast<int>(p.get_int("height"))),
          room_target_(p.get_int("room_target")),
          room_max_(p.get_int("room_max")),
          boss_distance_(p.get_int("boss_distance")) {}

    InfoRecord info(const Value& content) const override {
        const auto tiles = grid_tiles(content, width_, height_);
        const auto map = detail::passable_map(tiles, width_, height_, isaac::none);
        InfoRecord info;
        info.set("tiles", detail::to_array(tiles));
        const auto cells = static_cast<std::int64_t>(tiles.size());
        info.set("rooms", cells - detail::count_of(tiles, isaac::none));
        InfoRecord counts;
        counts.set("start", detail::count_of(tiles, isaac::start));
        counts.set("boss", detail::count_of(tiles, isaac::boss));
        counts.set("treasure", detail::count_of(tiles, isaac::treasure));
        counts.set("shop", detail::count_of(tiles, isaac::shop));
        info.set("counts", std::move(counts));
        info.set("components", solvers::connected_components(map));
        info.set("boss_distance", detail::distance_or_zero(map, detail::first_of(tiles, isaac::start),
                                                           detail::first_of(tiles, isaac::boss)));

        std::int64_t adjacent = 0;
        for (int y = 0; y < height_; ++y) {
            for (int x = 0; x < width_; ++x) {
                if (tiles[static_cast<std::size_t>(y * width_ + x)] != isaac::treasure) continue;
                const int dx[] = {1, -1, 0, 0};
                const int dy[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int nx = x + dx[k];
                    const int ny = y + dy[k];
                    if (nx < 0 || ny < 0 || nx >= width_ || ny >= height_) continue;
                    if (tiles[static_cast<std::size_t>(ny * width_ + nx)] == isaac::boss) ++adjacent;
                }
            }
        }
        info.set("treasure_boss_adjacent", adjacent);
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        const auto& counts = info.get_record("counts");
        const std::int64_t cells = width_ * height_;
        const double specials = detail::mean_score({
            count_closeness(counts.get_int("start"), 1, 1, cells),
            count_closeness(counts.get_int("boss"), 1, 1, cells),
            count_closeness(counts.get_int("treasure"), 1, 1, cells),
            count_closeness(counts.get_int("shop"), 1, 1, cells),
        });
        return {detail::components_score(info.get_int("components")),
                specials,
                std::min(1.0, static_cast<double>(info.get_int("boss_distance")) / static_cast<double>(boss_distance_)),
                1.0 / static_cast<double>(1 + info.get_int("treasure_boss_adjacent")),
                count_closeness(info.get_int("rooms"), room_target_, room_max_, cells)};
    }

    double diversity(const InfoRecord& a, const InfoRecord& b) const override {
        return detail::scaled_hamming(a.get_array("tiles"), b.get_array("tiles"), 0.3);
    }

    double controllability(const InfoRecord& info, const Value& control) const override {
        const auto target = detail::control_field(control, control_space(), "rooms");
        return window_closeness(static_cast<double>(info.get_int("rooms")), static_cast<double>(target - 1),
                                static_cast<double>(target + 1), 0.0, static_cast<double>(width_ * height_));
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        const auto tiles = grid_tiles(content, width_, height_);
        constexpr int room_w = 26;
        constexpr int room_h = 18;
        constexpr int gap = 6;
        const Rgb background{24, 20, 24};
        const Rgb room{160, 140, 120};
        const Rgb door{110, 95, 80};
        const Rgb icons[] = {{0, 0, 0}, {0, 0, 0}, {60, 172, 215}, {200, 40, 40}, {244, 180, 27}, {90, 200, 90}};
        Image image(width_ * (room_w + gap) + gap, height_ * (room_h + gap) + gap, background);
        const auto at = [&](int x, int y) { return tiles[static_cast<std::size_t>(y * width_ + x)]; };
        for (int y = 0; y < height_; ++y) {
            for (int x = 0; x < width_; ++x) {
                const int t = at(x, y);
                if (t == isaac::none) continue;
                const int px = gap + x * (room_w + gap);
                const int py = gap + y * (room_h + gap);
                image.fill_rect(px, py, room_w, room_h, room);
                if (t != isaac::normal) image.fill_rect(px + room_w / 2 - 4, py + room_h / 2 - 4, 8, 8, icons[t]);
                if (x + 1 < width_ && at(x + 1, y) != isaac::none) image.fill_rect(px + room_w, py + room_h / 2 - 2, gap, 4, door);
                if (y + 1 < height_ && at(x, y + 1) != isaac::none) image.fill_rect(px + room_w / 2 - 2, py + room_h, 4, gap, door);
            }
        }
        return {{"png", encode_png(image), ""}};
    }

private:
    int width_;
    int height_;
    std::int64_t room_target_;
    std::int64_t room_max_;
    std::int64_t boss_distance_;
};

}  // namespace

VariantParams isaac_defaults() {
    return VariantParams({{"width", std::int64_t{8}},
                          {"height", std::int64_t{8}},
                          {"room_target", std::int64_t{8}},
                          {"room_min", std::int64_t{5}},
                          {"room_max", std::int64_t{20}},
                          {"boss_distance", std::int64_t{3}}});
}

std::unique_ptr<Problem> make_isaac(const VariantParams& params) { return std::make_unique<IsaacProblem>(params); }

}  // namespace pcgb::problems
