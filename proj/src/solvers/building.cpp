#include "pcgbench/solvers/building.hpp"

#include <algorithm>

namespace pcgb::solvers {

int footprint_width(BlockType t) { return (t == BlockType::b3x1 || t == BlockType::b3x3) ? 3 : 1; }
int footprint_depth(BlockType t) { return (t == BlockType::b1x3 || t == BlockType::b3x3) ? 3 : 1; }

SupportReport check_support(const std::vector<Block>& blocks, const BuildingBox& box) {
    SupportReport r;
    const auto volume = static_cast<std::size_t>(box.width * box.depth * box.height);
    const auto index = [&](int x, int y, int z) {
        return static_cast<std::size_t>((z * box.depth + y) * box.width + x);
    };
    const auto inside = [&](int x, int y, int z) {
        return x >= 0 && y >= 0 && z >= 0 && x < box.width && y < box.depth && z < box.height;
    };
    std::vector<std::uint8_t> count(volume, 0);
    for (const auto& b : blocks) {
        bool block_inside = true;
        for (int dy = 0; dy < footprint_depth(b.type); ++dy) {
            for (int dx = 0; dx < footprint_width(b.type); ++dx) {
                const int x = b.x + dx;
                const int y = b.y + dy;
                if (!inside(x, y, b.z)) {
                    block_inside = false;
                    continue;
                }
                auto& c = count[index(x, y, b.z)];
                if (c > 0) ++r.overlapping_voxels;
                c = static_cast<std::uint8_t>(std::min(c + 1, 255));
            }
        }
        if (!block_inside) ++r.out_of_bounds_blocks;
    }
    r.in_bounds = r.out_of_bounds_blocks == 0;
    r.overlap_free = r.overlapping_voxels == 0;
    r.occupancy.resize(volume);
    for (std::size_t i = 0; i < volume; ++i) r.occupancy[i] = count[i] > 0 ? 1 : 0;

    for (const auto& b : blocks) {
        if (b.z <= 0) continue;
        bool rests = false;
        for (int dy = 0; dy < footprint_depth(b.type) && !rests; ++dy) {
            for (int dx = 0; dx < footprint_width(b.type) && !rests; ++dx) {
                const int x = b.x + dx;
                const int y = b.y + dy;
                rests = inside(x, y, b.z - 1) && r.occupancy[index(x, y, b.z - 1)];
            }
        }
        if (!rests) ++r.unsupported_blocks;
    }
    r.supported = r.unsupported_blocks == 0;

    std::vector<std::uint8_t> seen(volume, 0);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < volume; ++s) {
        if (!r.occupancy[s] || seen[s]) continue;
        ++r.components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            const int x = static_cast<int>(i % static_cast<std::size_t>(box.width));
            const int y = static_cast<int>((i / static_cast<std::size_t>(box.width)) % static_cast<std::size_t>(box.depth));
            const int z = static_cast<int>(i / static_cast<std::size_t>(box.width * box.depth));
            const int nb[6][3] = {{x - 1, y, z}, {x + 1, y, z}, {x, y - 1, z}, {x, y + 1, z}, {x, y, z - 1}, {x, y, z + 1}};
            for (const auto& n : nb) {
                if (!inside(n[0], n[1], n[2])) continue;
                const auto j = index(n[0], n[1], n[2]);
                if (!r.occupancy[j] || seen[j]) continue;
                seen[j] = 1;
                stack.push_back(j);
            }
        }
    }
    r.connected = r.components <= 1;
    for (std::size_t i = 0; i < volume; ++i) {
        if (r.occupancy[i]) r.height = std::max(r.height, static_cast<int>(i / static_cast<std::size_t>(box.width * box.depth)) + 1);
    }
    return r;
}

}  // namespace pcgb::solvers
