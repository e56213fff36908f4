#include "tsallis/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tsallis/errors.hpp"

namespace tsallis {

Histogram::Histogram(const Counts& counts)
    : counts_(counts), total_(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})) {
    if (total_ == 0) {
        throw InvalidArgument("histogram must contain at least one pixel");
    }
}

Histogram histogram_of(const GrayImage& img) {
    Histogram::Counts counts{};
    for (const std::uint8_t v : img.pixels()) {
        ++counts[v];
    }
    return Histogram(counts);
}

GrayDistribution normalize(const Histogram& h) {
    GrayDistribution::Probs probs{};
    const auto total = static_cast<double>(h.total());
    for (int i = 0; i < kLevels; ++i) {
        probs[static_cast<std::size_t>(i)] = static_cast<double>(h.count(i)) / total;
    }
    return GrayDistribution::from_probabilities(probs);
}

GrayDistribution GrayDistribution::from_probabilities(std::span<const double> probs) {
    if (probs.size() > static_cast<std::size_t>(kLevels)) {
        throw InvalidArgument("distribution has more than 256 levels");
    }
    Probs out{};
    double sum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw InvalidArgument("probability at level " + std::to_string(i) + " is negative or not finite");
        }
        out[i] = p;
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
        throw InvalidArgument("probabilities do not sum to 1");
    }
    return GrayDistribution(out);
}

GrayDistribution GrayDistribution::from_weights(std::span<const double> weights) {
    if (weights.size() > static_cast<std::size_t>(kLevels)) {
        throw InvalidArgument("distribution has more than 256 levels");
    }
    double sum = 0.0;
    for (const double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw InvalidArgument("weights must be non-negative and finite");
        }
        sum += w;
    }
    if (!(sum > 0.0)) {
        throw InvalidArgument("weights must have positive sum");
    }
    Probs out{};
    std::transform(weights.begin(), weights.end(), out.begin(), [sum](double w) { return w / sum; });
    return GrayDistribution(out);
}

int GrayDistribution::occupied_levels() const noexcept {
    return static_cast<int>(std::count_if(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; }));
}

}  // namespace tsallis
