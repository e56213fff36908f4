#include "tsallis/segmenter.hpp"

#include <array>
#include <cmath>
#include <string>

#include "tsallis/errors.hpp"
#include "tsallis/histogram.hpp"

namespace tsallis {

LevelMap::LevelMap(std::vector<int> tones) {
    if (tones.size() < 2) {
        throw InvalidArgument("level map needs at least two tones");
    }
    int prev = -1;
    for (const int v : tones) {
        if (v < 0 || v > kMaxLevel) {
            throw InvalidArgument("tone " + std::to_string(v) + " outside [0, 255]");
        }
        if (v <= prev) {
            throw InvalidArgument("level map tones must be strictly increasing");
        }
        tones_.push_back(static_cast<std::uint8_t>(v));
        prev = v;
    }
}

LevelMap LevelMap::evenly_spaced(int classes) {
    if (classes < 2 || classes > kLevels) {
        throw InvalidArgument("class count must be between 2 and 256");
    }
    std::vector<int> tones;
    for (int j = 0; j < classes; ++j) {
        tones.push_back(static_cast<int>(std::lround(255.0 * j / (classes - 1))));
    }
    return LevelMap(std::move(tones));
}

GrayImage apply_thresholds(const GrayImage& img, const ThresholdSet& ts, const LevelMap& map) {
    if (map.class_count() != ts.class_count()) {
        throw InvalidArgument("level map has " + std::to_string(map.class_count()) + " tones but thresholds define " +
                              std::to_string(ts.class_count()) + " classes");
    }
    std::array<std::uint8_t, kLevels> lut{};
    for (int v = 0; v < kLevels; ++v) {
        lut[static_cast<std::size_t>(v)] = map[ts.class_of(v)];
    }
    std::vector<std::uint8_t> out(img.size());
    const auto in = img.pixels();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = lut[in[i]];
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

}  // namespace tsallis
