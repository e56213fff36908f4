#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsallis {

/// 8-bit grayscale raster, row-major. Immutable after construction.
class GrayImage {
public:
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }
    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

    std::uint8_t at(int x, int y) const { return pixels_.at(static_cast<std::size_t>(y) * width_ + x); }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// Reads a PGM (P2 or P5, maxval 255) or an 8-bit grayscale PNG.
/// Throws IoError if the file cannot be read, FormatError if it is not a
/// supported single-channel 8-bit image.
GrayImage read_image(const std::filesystem::path& path);

/// Writes `img` as binary PGM (P5, maxval 255). Throws IoError on failure.
void write_image(const GrayImage& img, const std::filesystem::path& path);

/// Decodes an in-memory PGM (P2 or P5).
GrayImage decode_pgm(std::string_view bytes);

/// Encodes as P5 with maxval 255.
std::string encode_pgm(const GrayImage& img);

/// True when the library was built with PNG input support.
bool png_supported() noexcept;

}  // namespace tsallis
