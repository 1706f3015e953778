#include <fmt/format.h>

#include "common.hpp"
#include "pcgbench/problems/problems.hpp"

namespace pcgb::problems {

namespace {

using detail::grid_tiles;

class BinaryProblem final : public Problem {
public:
    explicit BinaryProblem(const VariantParams& p)
        : Problem("binary-v0", p,
                  SpaceDescriptor::grid2d(SpaceDescriptor::discrete(2), static_cast<std::size_t>(p.get_int("width")),
                                          static_cast<std::size_t>(p.get_int("height"))),
                  SpaceDescriptor::record({{"path_target", SpaceDescriptor::range(
                                                               p.get_int("path_target"),
                                                               std::max(p.get_int("path_target"),
                                                                        p.get_int("width") * p.get_int("height") / 2 - 1))}})),
          width_(static_cast<int>(p.get_int("width"))),
          height_(static_cast<int>(p.get_int("height"))),
          path_target_(p.get_int("path_target")),
          control_window_(p.get_int("control_window")) {}

    InfoRecord info(const Value& content) const override {
        const auto tiles = grid_tiles(content, width_, height_);
        const auto map = detail::passable_map(tiles, width_, height_, binary::solid);
        InfoRecord info;
        info.set("tiles", detail::to_array(tiles));
        const int components = solvers::connected_components(map);
        info.set("components", components);
        info.set("diameter", components > 0 ? solvers::graph_diameter(map) : 0);
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        const auto diameter = static_cast<double>(info.get_int("diameter"));
        return {detail::components_score(info.get_int("components")),
                std::min(1.0, diameter / static_cast<double>(path_target_))};
    }

    double diversity(const InfoRecord& a, const InfoRecord& b) const override {
        return detail::scaled_hamming(a.get_array("tiles"), b.get_array("tiles"), 0.3);
    }

    double controllability(const InfoRecord& info, const Value& control) const override {
        const auto target = detail::control_field(control, control_space(), "path_target");
        const auto bounds = control_space().fields()[0].space.bounds();
        return window_closeness(static_cast<double>(info.get_int("diameter")), static_cast<double>(target),
                                static_cast<double>(target + control_window_), static_cast<double>(bounds.lo),
                                static_cast<double>(bounds.hi));
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        static const std::vector<TileStyle> palette = {{{255, 255, 255}, {}, false}, {{0, 0, 0}, {}, false}};
        return {{"png", encode_png(render_tile_grid(grid_tiles(content, width_, height_), width_, height_, palette)), ""}};
    }

private:
    int width_;
    int height_;
    std::int64_t path_target_;
    std::int64_t control_window_;
};

}  // namespace

VariantParams binary_defaults() {
    return VariantParams({{"width", std::int64_t{14}},
                          {"height", std::int64_t{14}},
                          {"path_target", std::int64_t{28}},
                          {"control_window", std::int64_t{10}}});
}

std::unique_ptr<Problem> make_binary(const VariantParams& params) { return std::make_unique<BinaryProblem>(params); }

Value make_grid(const std::vector<int>& tiles, int width, int height) {
    return detail::grid_from_tiles(tiles, width, height);
}

std::vector<int> grid_symbols(const Value& grid, int width, int height) { return grid_tiles(grid, width, height); }

}  // namespace pcgb::problems
