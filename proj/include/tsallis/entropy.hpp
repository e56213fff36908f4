#pragma once

#include <span>
#include <vector>

#include "tsallis/histogram.hpp"
#include "tsallis/threshold_set.hpp"

namespace tsallis {

/// The entropic index q. Must be positive; q == 1 only marks the Shannon limit.
class EntropicIndex {
public:
    /// Throws DomainError unless q is finite and positive.
    explicit EntropicIndex(double q);

    double value() const noexcept { return q_; }
    bool is_shannon_limit() const noexcept { return q_ == 1.0; }

    friend bool operator==(const EntropicIndex&, const EntropicIndex&) = default;

private:
    double q_;
};

inline constexpr double kUnitSumTolerance = 1e-9;

/// (1 - sum p_i^q) / (q - 1) with 0^q = 0.
/// Throws DomainError for q == 1 (use shannon_entropy) or when `p` does not
/// sum to 1 within kUnitSumTolerance.
double tsallis_entropy(std::span<const double> p, EntropicIndex q);
double tsallis_entropy(const GrayDistribution& d, EntropicIndex q);

/// -sum p_i ln p_i with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> p);
double shannon_entropy(const GrayDistribution& d);

/// Probability mass of the levels in `range`.
double class_mass(const GrayDistribution& d, LevelRange range);

/// Tsallis entropy of `d` restricted to `range` and renormalized by the class
/// mass. Throws InvalidPartition if the class is empty.
double class_entropy(const GrayDistribution& d, LevelRange range, EntropicIndex q);

/// Pseudo-additive composition of independent class entropies:
/// [prod_j (1 + (1-q) S_j) - 1] / (1 - q).
double pseudo_additive_total(std::span<const double> class_entropies, EntropicIndex q);

/// Class masses and ranges induced by a threshold set.
struct ClassDecomposition {
    ThresholdSet thresholds;
    std::vector<double> class_probs;
    std::vector<LevelRange> class_ranges;
};

ClassDecomposition decompose(const GrayDistribution& d, const ThresholdSet& ts);

/// Total entropy of the partition induced by `ts`. Throws InvalidPartition
/// if any class is empty.
double total_entropy(const GrayDistribution& d, const ThresholdSet& ts, EntropicIndex q);

}  // namespace tsallis
