#pragma once

#include <cstdint>
#include <vector>

namespace pcgb::solvers {

/// Footprints: 1x1, 1x3 (one wide in x, three deep in y), 3x1, 3x3. Every
/// block is one voxel tall; (x, y, z) is its minimum corner.
enum class BlockType : std::uint8_t { b1x1, b1x3, b3x1, b3x3 };

struct Block {
    BlockType type = BlockType::b1x1;
    int x = 0;
    int y = 0;
    int z = 0;
};

struct BuildingBox {
    int width = 7;
    int depth = 7;
    int height = 12;
};

struct SupportReport {
    bool in_bounds = true;     // every footprint voxel lies inside the box
    bool overlap_free = true;  // no voxel occupied twice
    bool supported = true;     // every block above ground rests on an occupied voxel
    bool connected = true;     // occupied voxels form one 6-neighbor component
    int height = 0;            // highest occupied z + 1
    int out_of_bounds_blocks = 0;
    int overlapping_voxels = 0;
    int unsupported_blocks = 0;
    int components = 0;
    /// Row-major occupancy of the in-box voxels, index (z * depth + y) * width + x.
    std::vector<std::uint8_t> occupancy;
};

[[nodiscard]] int footprint_width(BlockType t);
[[nodiscard]] int footprint_depth(BlockType t);

/// Structural checks over a placed block list. Voxels outside the box are
/// reported through `in_bounds` and otherwise ignored.
[[nodiscard]] SupportReport check_support(const std::vector<Block>& blocks, const BuildingBox& box = {});

}  // namespace pcgb::solvers
