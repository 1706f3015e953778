#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pcgb {

using Rgb = std::array<std::uint8_t, 3>;

/// 8-bit RGB raster used by the renderers.
class Image {
public:
    Image(int width, int height, Rgb background = {0, 0, 0});

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] Rgb pixel(int x, int y) const;
    void set_pixel(int x, int y, Rgb c);
    /// Clipped to the image.
    void fill_rect(int x, int y, int w, int h, Rgb c);
    /// Copies `src` with its top-left corner at (x, y), clipped.
    void blit(const Image& src, int x, int y);

    [[nodiscard]] const std::vector<std::uint8_t>& data() const { return rgb_; }

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> rgb_;
};

/// PNG file bytes for the image. Throws std::runtime_error on encoder failure.
[[nodiscard]] std::string encode_png(const Image& image);

/// Decodes PNG bytes (RGB). Used by tests and tools to inspect renders.
[[nodiscard]] Image decode_png(const std::string& bytes);

/// Renders a tile grid with one `tile_px` square per cell. `glyph` marks are
/// drawn as a centered inner square in the second color when it differs.
struct TileStyle {
    Rgb fill;
    Rgb mark;
    bool has_mark = false;
};
[[nodiscard]] Image render_tile_grid(const std::vector<int>& tiles, int width, int height,
                                     const std::vector<TileStyle>& palette, int tile_px = 16);

}  // namespace pcgb
