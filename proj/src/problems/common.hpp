#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pcgbench/core/image.hpp"
#include "pcgbench/core/info.hpp"
#include "pcgbench/core/problem.hpp"
#include "pcgbench/core/space.hpp"
#include "pcgbench/solvers/grid.hpp"

namespace pcgb::problems::detail {

/// Row-major tile symbols of a Grid2D value.
inline std::vector<int> grid_tiles(const Value& v, int width, int height) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(width * height));
    for (int y = 0; y < height; ++y) {
        const auto& row = v[static_cast<std::size_t>(y)];
        for (int x = 0; x < width; ++x) out.push_back(static_cast<int>(row[static_cast<std::size_t>(x)].leaf()));
    }
    return out;
}

inline InfoRecord::Array to_array(const std::vector<int>& v) { return InfoRecord::Array(v.begin(), v.end()); }

inline std::int64_t count_of(const std::vector<int>& tiles, int symbol) {
    return std::count(tiles.begin(), tiles.end(), symbol);
}

/// Index of the first tile with `symbol`, or -1.
inline int first_of(const std::vector<int>& tiles, int symbol) {
    auto it = std::find(tiles.begin(), tiles.end(), symbol);
    return it == tiles.end() ? -1 : static_cast<int>(it - tiles.begin());
}

inline solvers::GridMap passable_map(const std::vector<int>& tiles, int width, int height, int blocking_symbol) {
    std::vector<std::uint8_t> pass(tiles.size());
    for (std::size_t i = 0; i < tiles.size(); ++i) pass[i] = tiles[i] == blocking_symbol ? 0 : 1;
    return solvers::GridMap(width, height, std::move(pass));
}

/// Number of positions where two equal-length arrays differ.
inline std::int64_t hamming(const InfoRecord::Array& a, const InfoRecord::Array& b) {
    std::int64_t d = 0;
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) d += a[i] != b[i] ? 1 : 0;
    return d + static_cast<std::int64_t>(std::max(a.size(), b.size()) - n);
}

/// Tile Hamming distance scaled so that `fraction` of differing tiles gives 1.
inline double scaled_hamming(const InfoRecord::Array& a, const InfoRecord::Array& b, double fraction) {
    const double threshold = fraction * static_cast<double>(std::max(a.size(), b.size()));
    if (threshold <= 0.0) return 0.0;
    return std::min(1.0, static_cast<double>(hamming(a, b)) / threshold);
}

/// Step distance between two cells on a map, 0 when either is missing or unreachable.
inline std::int64_t distance_or_zero(const solvers::GridMap& map, int from, int to) {
    if (from < 0 || to < 0) return 0;
    const auto dist = solvers::bfs_distances(map, map.cell(static_cast<std::size_t>(from)));
    return std::max(0, dist[static_cast<std::size_t>(to)]);
}

inline double components_score(std::int64_t components) {
    return components <= 0 ? 0.0 : 1.0 / static_cast<double>(components);
}

inline Value grid_from_tiles(const std::vector<int>& tiles, int width, int height) {
    std::vector<Value> rows;
    rows.reserve(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        std::vector<Value> row;
        row.reserve(static_cast<std::size_t>(width));
        for (int x = 0; x < width; ++x) row.emplace_back(tiles[static_cast<std::size_t>(y * width + x)]);
        rows.push_back(Value::list(std::move(row)));
    }
    return Value::list(std::move(rows));
}

inline std::int64_t control_field(const Value& control, const SpaceDescriptor& space, const std::string& name) {
    return control[space.field_index(name)].leaf();
}

/// Closeness of a measured grid coordinate to a target, window +-1 cell,
/// 0 when the object is missing (measured < 0).
inline double coordinate_closeness(std::int64_t measured, std::int64_t target, std::int64_t size) {
    if (measured < 0) return 0.0;
    return window_closeness(static_cast<double>(measured), static_cast<double>(target - 1),
                            static_cast<double>(target + 1), 0.0, static_cast<double>(size - 1));
}

/// Mean of per-symbol count closeness values; exactly 1 only when every count is in its window.
inline double mean_score(std::initializer_list<double> scores) {
    return combine_subscores(std::vector<double>(scores));
}

}  // namespace pcgb::problems::detail
