#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsallis/image_io.hpp"
#include "tsallis/threshold_set.hpp"

namespace tsallis {

/// Output tone of each class; strictly increasing values in [0,255].
class LevelMap {
public:
    explicit LevelMap(std::vector<int> tones);

    /// round(255 j / (m - 1)) for j = 0..m-1.
    static LevelMap evenly_spaced(int classes);

    int class_count() const noexcept { return static_cast<int>(tones_.size()); }
    std::uint8_t operator[](int j) const { return tones_.at(static_cast<std::size_t>(j)); }
    std::span<const std::uint8_t> tones() const noexcept { return tones_; }

private:
    std::vector<std::uint8_t> tones_;
};

/// Maps pixel v in class j (t_{j-1} < v <= t_j) to map[j]. With two classes
/// and map {0,255}: v <= t becomes black, v > t white.
/// Throws InvalidArgument when the map arity differs from the class count.
GrayImage apply_thresholds(const GrayImage& img, const ThresholdSet& ts, const LevelMap& map);

}  // namespace tsallis
