#include "pcgbench/core/image.hpp"

#include <algorithm>
#include <stdexcept>

#include <png.h>

namespace pcgb {

Image::Image(int width, int height, Rgb background)
    : width_(width), height_(height), rgb_(static_cast<std::size_t>(width) * height * 3) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("Image: dimensions must be positive");
    fill_rect(0, 0, width, height, background);
}

Rgb Image::pixel(int x, int y) const {
    const auto i = (static_cast<std::size_t>(y) * width_ + x) * 3;
    return {rgb_[i], rgb_[i + 1], rgb_[i + 2]};
}

void Image::set_pixel(int x, int y, Rgb c) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
    const auto i = (static_cast<std::size_t>(y) * width_ + x) * 3;
    rgb_[i] = c[0];
    rgb_[i + 1] = c[1];
    rgb_[i + 2] = c[2];
}

void Image::fill_rect(int x, int y, int w, int h, Rgb c) {
    const int x0 = std::max(x, 0);
    const int y0 = std::max(y, 0);
    const int x1 = std::min(x + w, width_);
    const int y1 = std::min(y + h, height_);
    for (int yy = y0; yy < y1; ++yy) {
        for (int xx = x0; xx < x1; ++xx) set_pixel(xx, yy, c);
    }
}

void Image::blit(const Image& src, int x, int y) {
    for (int yy = 0; yy < src.height(); ++yy) {
        for (int xx = 0; xx < src.width(); ++xx) set_pixel(x + xx, y + yy, src.pixel(xx, yy));
    }
}

std::string encode_png(const Image& image) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width());
    png.height = static_cast<png_uint_32>(image.height());
    png.format = PNG_FORMAT_RGB;
    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&png, nullptr, &size, 0, image.data().data(), 0, nullptr)) {
        throw std::runtime_error(std::string("png encode failed: ") + png.message);
    }
    std::string out(size, '\0');
    if (!png_image_write_to_memory(&png, out.data(), &size, 0, image.data().data(), 0, nullptr)) {
        throw std::runtime_error(std::string("png encode failed: ") + png.message);
    }
    out.resize(size);
    return out;
}

Image decode_png(const std::string& bytes) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
        throw std::runtime_error(std::string("png decode failed: ") + png.message);
    }
    png.format = PNG_FORMAT_RGB;
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, buffer.data(), 0, nullptr)) {
        throw std::runtime_error(std::string("png decode failed: ") + png.message);
    }
    Image img(static_cast<int>(png.width), static_cast<int>(png.height));
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            const auto i = (static_cast<std::size_t>(y) * img.width() + x) * 3;
            img.set_pixel(x, y, {buffer[i], buffer[i + 1], buffer[i + 2]});
        }
    }
    return img;
}

Image render_tile_grid(const std::vector<int>& tiles, int width, int height, const std::vector<TileStyle>& palette,
                       int tile_px) {
    Image img(width * tile_px, height * tile_px);
    const int inset = tile_px / 4;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const auto& style = palette.at(static_cast<std::size_t>(tiles[static_cast<std::size_t>(y * width + x)]));
            img.fill_rect(x * tile_px, y * tile_px, tile_px, tile_px, style.fill);
            if (style.has_mark) {
                img.fill_rect(x * tile_px + inset, y * tile_px + inset, tile_px - 2 * inset, tile_px - 2 * inset,
                              style.mark);
            }
        }
    }
    return img;
}

}  // namespace pcgb
