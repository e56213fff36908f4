#pragma once

#include <variant>
#include <vector>

#include "tsallis/histogram.hpp"
#include "tsallis/threshold_set.hpp"

namespace tsallis {

struct SweepConfig {
    double q_min = 0.01;
    double q_max = 0.99;
    double q_step = 0.005;
    int classes = 2;
    int jump_threshold = 16;  ///< gray levels
    double refine_tol = 1e-3;

    /// Throws InvalidArgument on a malformed grid or parameters.
    void validate() const;

    /// q_min, q_min + step, ... up to q_max. Points are computed as
    /// q_min + i * step; a point overshooting q_max by rounding only is kept.
    std::vector<double> grid() const;
};

struct CurveRow {
    double q;
    ThresholdSet thresholds;
    double entropy;
};

struct ThresholdCurve {
    std::vector<CurveRow> rows;
};

/// Adjacent curve rows across which some threshold moves by >= J levels.
struct Bracket {
    double q_low;
    double q_high;
    ThresholdSet below;
    ThresholdSet above;
};

struct Transition {
    double q_low;
    double q_high;
    double critical_q;
    std::vector<int> jumps;  ///< per threshold
    ThresholdSet below;
    ThresholdSet above;

    int max_jump() const;
};

/// A bracket whose jump splits into steps smaller than J under bisection.
struct GradualChange {
    double q_low;
    double q_high;
    ThresholdSet below;
    ThresholdSet above;
};

using Refinement = std::variant<Transition, GradualChange>;

struct TransitionReport {
    std::vector<Transition> transitions;
    std::vector<GradualChange> gradual;
};

/// Optimizes at every grid point. `workers` == 0 picks the hardware
/// concurrency; the result does not depend on it.
ThresholdCurve sweep(const GrayDistribution& d, const SweepConfig& cfg, unsigned workers = 0);

std::vector<Bracket> detect_transitions(const ThresholdCurve& curve, int jump_threshold);

/// Bisects [q_low, q_high] keeping the half across which a jump >= J
/// persists, until the width is <= refine_tol. The lower half is examined
/// first. Throws InvalidArgument when the endpoint optima do not differ by
/// at least J.
Refinement refine_transition(const GrayDistribution& d, int classes, double q_low, double q_high,
                             int jump_threshold, double refine_tol);

/// detect_transitions followed by refine_transition on each bracket.
TransitionReport analyze_transitions(const GrayDistribution& d, const ThresholdCurve& curve,
                                     const SweepConfig& cfg);

}  // namespace tsallis
