#include <fmt/format.h>

#include "common.hpp"
#include "pcgbench/problems/problems.hpp"
#include "pcgbench/solvers/building.hpp"

namespace pcgb::problems {

namespace {

const char* const kTypeFields[] = {"b1x1", "b1x3", "b3x1", "b3x3"};

class BuildingProblem final : public Problem {
public:
    explicit BuildingProblem(const VariantParams& p)
        : Problem("building-v0", p, make_content_space(p),
                  SpaceDescriptor::record({{"b1x1", SpaceDescriptor::range(0, p.get_int("block_count"))},
                                           {"b1x3", SpaceDescriptor::range(0, p.get_int("block_count"))},
                                           {"b3x1", SpaceDescriptor::range(0, p.get_int("block_count"))},
                                           {"b3x3", SpaceDescriptor::range(0, p.get_int("block_count"))}})),
          box_{static_cast<int>(p.get_int("width")), static_cast<int>(p.get_int("depth")),
               static_cast<int>(p.get_int("height"))},
          block_count_(p.get_int("block_count")),
          min_height_(p.get_int("min_height")),
          control_window_(p.get_int("control_window")) {}

    InfoRecord info(const Value& content) const override {
        const auto blocks = blocks_of(content);
        const auto report = solvers::check_support(blocks, box_);
        InfoRecord info;
        info.set("blocks", static_cast<std::int64_t>(blocks.size()));
        info.set("out_of_bounds_blocks", report.out_of_bounds_blocks);
        info.set("overlapping_voxels", report.overlapping_voxels);
        info.set("unsupported_blocks", report.unsupported_blocks);
        info.set("components", report.components);
        info.set("height", report.height);
        info.set("occupancy", InfoRecord::Array(report.occupancy.begin(), report.occupancy.end()));
        InfoRecord counts;
        std::int64_t per_type[4] = {0, 0, 0, 0};
        for (const auto& b : blocks) ++per_type[static_cast<int>(b.type)];
        for (int t = 0; t < 4; ++t) counts.set(kTypeFields[t], per_type[t]);
        info.set("type_counts", std::move(counts));
        return info;
    }

    std::vector<double> quality_subscores(const InfoRecord& info) const override {
        const double n = static_cast<double>(std::max<std::int64_t>(1, info.get_int("blocks")));
        const auto fraction_ok = [&](std::int64_t bad) {
            return bad == 0 ? 1.0 : std::min(std::nextafter(1.0, 0.0), 1.0 - static_cast<double>(bad) / n);
        };
        return {fraction_ok(info.get_int("out_of_bounds_blocks")),
                info.get_int("overlapping_voxels") == 0 ? 1.0 : 0.0,
                fraction_ok(info.get_int("unsupported_blocks")),
                detail::components_score(info.get_int("components")),
                std::min(1.0, static_cast<double>(info.get_int("height")) / static_cast<double>(min_height_))};
    }

    double diversity(const InfoRecord& a, const InfoRecord& b) const override {
        return detail::scaled_hamming(a.get_array("occupancy"), b.get_array("occupancy"), 0.2);
    }

    double controllability(const InfoRecord& info, const Value& control) const override {
        const auto& space = control_space();
        double requested[4];
        double sum = 0.0;
        for (int t = 0; t < 4; ++t) {
            requested[t] = static_cast<double>(detail::control_field(control, space, kTypeFields[t]));
            sum += requested[t];
        }
        const auto& counts = info.get_record("type_counts");
        const double total = static_cast<double>(block_count_);
        double mean = 0.0;
        for (int t = 0; t < 4; ++t) {
            const double target = sum > 0.0 ? requested[t] * total / sum : total / 4.0;
            const auto window = static_cast<double>(control_window_);
            mean += window_closeness(static_cast<double>(counts.get_int(kTypeFields[t])), target - window,
                                     target + window, 0.0, total);
        }
        return mean / 4.0;
    }

    std::vector<RenderedFile> render(const Value& content) const override {
        const auto blocks = blocks_of(content);
        constexpr int px = 12;
        constexpr int gap = 4;
        constexpr int columns = 4;
        const int rows = (box_.height + columns - 1) / columns;
        const int layer_w = box_.width * px;
        const int layer_h = box_.depth * px;
        const Rgb colors[] = {{220, 60, 50}, {60, 120, 220}, {240, 200, 60}, {80, 180, 90}};
        Image montage(columns * (layer_w + gap) + gap, rows * (layer_h + gap) + gap, {30, 30, 30});
        for (int z = 0; z < box_.height; ++z) {
            const int ox = gap + (z % columns) * (layer_w + gap);
            const int oy = gap + (z / columns) * (layer_h + gap);
            montage.fill_rect(ox, oy, layer_w, layer_h, {235, 235, 235});
            for (const auto& b : blocks) {
                if (b.z != z) continue;
                for (int dy = 0; dy < solvers::footprint_depth(b.type); ++dy) {
                    for (int dx = 0; dx < solvers::footprint_width(b.type); ++dx) {
                        const int x = b.x + dx;
                        const int y = b.y + dy;
                        if (x >= box_.width || y >= box_.depth) continue;
                        montage.fill_rect(ox + x * px + 1, oy + y * px + 1, px - 2, px - 2,
                                          colors[static_cast<int>(b.type)]);
                    }
                }
            }
        }
        std::string voxels = "# type x y z\n";
        for (const auto& b : blocks) {
            voxels += fmt::format("{} {} {} {}\n", kTypeFields[static_cast<int>(b.type)], b.x, b.y, b.z);
        }
        return {{"png", encode_png(montage), ""}, {"txt", std::move(voxels), "voxels"}};
    }

private:
    static SpaceDescriptor make_content_space(const VariantParams& p) {
        auto block = SpaceDescriptor::record({{"type", SpaceDescriptor::discrete(4)},
                                              {"x", SpaceDescriptor::range(0, p.get_int("width") - 1)},
                                              {"y", SpaceDescriptor::range(0, p.get_int("depth") - 1)},
                                              {"z", SpaceDescriptor::range(0, p.get_int("height") - 1)}});
        return SpaceDescriptor::array(std::move(block), static_cast<std::size_t>(p.get_int("block_count")));
    }

    static std::vector<solvers::Block> blocks_of(const Value& content) {
        std::vector<solvers::Block> blocks;
        blocks.reserve(content.size());
        for (const auto& b : content.items()) {
            blocks.push_back({static_cast<solvers::BlockType>(b[0].leaf()), static_cast<int>(b[1].leaf()),
                              static_cast<int>(b[2].leaf()), static_cast<int>(b[3].leaf())});
        }
        return blocks;
    }

    solvers::BuildingBox box_;
    std::int64_t block_count_;
    std::int64_t min_height_;
    std::int64_t control_window_;
};

}  // namespace

VariantParams building_defaults() {
    return VariantParams({{"width", std::int64_t{7}},
                          {"depth", std::int64_t{7}},
                          {"height", std::int64_t{12}},
                          {"block_count", std::int64_t{40}},
                          {"min_height", std::int64_t{7}},
                          {"control_window", std::int64_t{2}}});
}

std::unique_ptr<Problem> make_building(const VariantParams& params) { return std::make_unique<BuildingProblem>(params); }

}  // namespace pcgb::problems
