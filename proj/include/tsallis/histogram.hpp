#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "tsallis/image_io.hpp"

namespace tsallis {

inline constexpr int kLevels = 256;
inline constexpr int kMaxLevel = kLevels - 1;

/// Gray-level occurrence counts over bins 0..255.
class Histogram {
public:
    using Counts = std::array<std::uint64_t, kLevels>;

    /// Throws InvalidArgument when every count is zero.
    explicit Histogram(const Counts& counts);

    std::uint64_t count(int level) const { return counts_.at(static_cast<std::size_t>(level)); }
    std::uint64_t total() const noexcept { return total_; }
    const Counts& counts() const noexcept { return counts_; }

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    Counts counts_;
    std::uint64_t total_;
};

/// Probability of each gray level. Zero bins are kept.
class GrayDistribution {
public:
    using Probs = std::array<double, kLevels>;

    /// Accepts at most 256 values (missing high levels are zero). Every value
    /// must be non-negative and the sum must be 1 within 1e-12.
    static GrayDistribution from_probabilities(std::span<const double> probs);

    /// Normalizes non-negative weights with positive sum.
    static GrayDistribution from_weights(std::span<const double> weights);

    double operator[](int level) const { return probs_.at(static_cast<std::size_t>(level)); }
    const Probs& probs() const noexcept { return probs_; }

    /// Number of levels with positive probability.
    int occupied_levels() const noexcept;

private:
    explicit GrayDistribution(const Probs& probs) : probs_(probs) {}
    Probs probs_;
};

Histogram histogram_of(const GrayImage& img);

GrayDistribution normalize(const Histogram& h);

inline constexpr double kNormalizationTolerance = 1e-12;

}  // namespace tsallis
