#pragma once

#include <functional>
#include <vector>

#include "tsallis/entropy.hpp"
#include "tsallis/histogram.hpp"
#include "tsallis/threshold_set.hpp"

namespace tsallis {

/// Candidates whose total entropy lies within this relative distance of the
/// maximum are ties; the lexicographically smallest tied tuple wins.
inline constexpr double kTieRelTolerance = 1e-12;

struct OptimizationResult {
    ThresholdSet thresholds;
    double entropy;  ///< total_entropy(d, thresholds, q)
    EntropicIndex q;
};

struct LandscapeRow {
    ThresholdSet thresholds;
    double entropy;
};

/// Exhaustive maximum-entropy threshold selection for `classes` classes.
///
/// Every threshold tuple whose classes all carry positive mass is scored;
/// the result is the maximizer under the kTieRelTolerance tie rule.
/// Throws DomainError for q outside (0,1), InvalidArgument for classes
/// outside [2, kMaxClasses], InfeasiblePartition when the distribution has
/// fewer occupied levels than classes.
OptimizationResult optimize(const GrayDistribution& d, int classes, EntropicIndex q);

/// One row per valid candidate in lexicographic order. Row count grows as
/// C(255, classes-1); prefer for_each_candidate for classes > 3.
std::vector<LandscapeRow> entropy_landscape(const GrayDistribution& d, int classes, EntropicIndex q);

/// Streams every valid candidate, in lexicographic order, to `visit`.
void for_each_candidate(const GrayDistribution& d, int classes, EntropicIndex q,
                        const std::function<void(const ThresholdSet&, double)>& visit);

/// Lexicographically first row of `rows` under the tie rule. `rows` must be
/// non-empty and sorted lexicographically.
const LandscapeRow& select_maximum(std::span<const LandscapeRow> rows);

}  // namespace tsallis
