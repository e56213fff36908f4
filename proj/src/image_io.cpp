#include "tsallis/image_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <algorithm>
#include <sstream>

#include "tsallis/errors.hpp"

#ifdef TSALLIS_HAVE_PNG
#include <png.h>
#endif

namespace tsallis {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width <= 0 || height <= 0) {
        throw InvalidArgument("image dimensions must be positive");
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw InvalidArgument("pixel count does not match width x height");
    }
}

namespace {

constexpr std::string_view kPngSignature{"\x89PNG\r\n\x1a\n", 8};

// Cursor over a PGM byte stream. Comments run from '#' to end of line.
class PgmReader {
public:
    explicit PgmReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    unsigned long next_uint(const char* what) {
        skip_space_and_comments();
        const char* first = bytes_.data() + pos_;
        const char* last = bytes_.data() + bytes_.size();
        unsigned long value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            throw FormatError(std::string("malformed PGM: expected ") + what);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        if (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_])) &&
            bytes_[pos_] != '#') {
            throw FormatError(std::string("malformed PGM: bad ") + what);
        }
        return value;
    }

    // The single whitespace byte separating maxval from a binary raster.
    void consume_raster_separator() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw FormatError("malformed PGM: missing whitespace before raster");
        }
        ++pos_;
    }

    std::string_view rest() const { return bytes_.substr(pos_); }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path.string());
    }
    return std::move(ss).str();
}

#ifdef TSALLIS_HAVE_PNG
GrayImage decode_png(const std::string& bytes, const std::filesystem::path& path) {
    // IHDR is always the first chunk: bit depth at byte 24, color type at 25.
    if (bytes.size() < 26) {
        throw FormatError("malformed PNG " + path.string() + ": truncated header");
    }
    const unsigned bit_depth = static_cast<unsigned char>(bytes[24]);
    const unsigned color_type = static_cast<unsigned char>(bytes[25]);
    if (color_type != 0 || bit_depth != 8) {
        throw FormatError("unsupported PNG " + path.string() +
                          ": only 8-bit single-channel grayscale is accepted; convert the image to 8-bit gray first");
    }
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
        throw FormatError("malformed PNG " + path.string() + ": " + image.message);
    }
    image.format = PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw FormatError("malformed PNG " + path.string() + ": " + msg);
    }
    return GrayImage(static_cast<int>(image.width), static_cast<int>(image.height), std::move(pixels));
}
#endif

}  // namespace

GrayImage decode_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw FormatError("not a PGM file (expected magic P2 or P5)");
    }
    const bool plain = bytes[1] == '2';
    PgmReader reader(bytes.substr(2));
    const unsigned long width = reader.next_uint("width");
    const unsigned long height = reader.next_uint("height");
    const unsigned long maxval = reader.next_uint("maxval");
    if (width == 0 || height == 0 || width > 1u << 20 || height > 1u << 20) {
        throw FormatError("malformed PGM: invalid dimensions");
    }
    if (maxval != 255) {
        throw FormatError("unsupported PGM maxval " + std::to_string(maxval) +
                          ": only 8-bit images with maxval 255 are accepted");
    }
    const std::size_t n = width * height;
    std::vector<std::uint8_t> pixels(n);
    if (plain) {
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned long v = reader.next_uint("pixel value");
            if (v > maxval) {
                throw FormatError("malformed PGM: pixel value exceeds maxval");
            }
            pixels[i] = static_cast<std::uint8_t>(v);
        }
    } else {
        reader.consume_raster_separator();
        const std::string_view raster = reader.rest();
        if (raster.size() < n) {
            throw FormatError("malformed PGM: truncated raster");
        }
        std::copy_n(raster.begin(), n, pixels.begin());
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::string encode_pgm(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels().data()), img.size());
    return out;
}

GrayImage read_image(const std::filesystem::path& path) {
    const std::string bytes = slurp(path);
    if (bytes.starts_with(kPngSignature)) {
#ifdef TSALLIS_HAVE_PNG
        return decode_png(bytes, path);
#else
        throw FormatError("PNG input is not supported by this build; convert " + path.string() + " to PGM");
#endif
    }
    try {
        return decode_pgm(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_image(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    const std::string bytes = encode_pgm(img);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

bool png_supported() noexcept {
#ifdef TSALLIS_HAVE_PNG
    return true;
#else
    return false;
#endif
}

}  // namespace tsallis
