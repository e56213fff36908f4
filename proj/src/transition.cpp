#include "tsallis/transition.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "tsallis/errors.hpp"
#include "tsallis/optimizer.hpp"

namespace tsallis {

void SweepConfig::validate() const {
    if (!(q_min > 0.0 && q_min < 1.0) || !(q_max > 0.0 && q_max < 1.0)) {
        throw InvalidArgument("q_min and q_max must lie in (0, 1)");
    }
    if (!(q_min < q_max)) {
        throw InvalidArgument("q_min must be smaller than q_max");
    }
    if (!(q_step > 0.0) || !std::isfinite(q_step)) {
        throw InvalidArgument("q_step must be positive");
    }
    if (q_step > q_max - q_min) {
        throw InvalidArgument("q_step must not exceed q_max - q_min");
    }
    if (classes < 2 || classes > kMaxClasses) {
        throw InvalidArgument("class count must be between 2 and " + std::to_string(kMaxClasses));
    }
    if (jump_threshold < 1) {
        throw InvalidArgument("jump threshold must be at least 1 gray level");
    }
    if (!(refine_tol > 0.0) || !std::isfinite(refine_tol)) {
        throw InvalidArgument("refine_tol must be positive");
    }
}

std::vector<double> SweepConfig::grid() const {
    validate();
    const auto n = static_cast<long>(std::floor((q_max - q_min) / q_step + 1e-9));
    std::vector<double> qs;
    qs.reserve(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        qs.push_back(q_min + static_cast<double>(i) * q_step);
    }
    return qs;
}

int Transition::max_jump() const {
    return jumps.empty() ? 0 : *std::max_element(jumps.begin(), jumps.end());
}

ThresholdCurve sweep(const GrayDistribution& d, const SweepConfig& cfg, unsigned workers) {
    const std::vector<double> qs = cfg.grid();
    if (d.occupied_levels() < cfg.classes) {
        throw InfeasiblePartition("distribution has fewer occupied gray levels than classes");
    }
    std::vector<CurveRow> rows(qs.size(), CurveRow{0.0, ThresholdSet{0}, 0.0});

    const unsigned hw = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
    const unsigned threads = std::min<unsigned>(hw, static_cast<unsigned>(qs.size()));
    // Static interleaved partition; every slot is written by exactly one worker.
    auto work = [&](unsigned id) {
        for (std::size_t i = id; i < qs.size(); i += threads) {
            const OptimizationResult r = optimize(d, cfg.classes, EntropicIndex(qs[i]));
            rows[i] = CurveRow{qs[i], r.thresholds, r.entropy};
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) {
            pool.emplace_back(work, id);
        }
    }
    return ThresholdCurve{std::move(rows)};
}

std::vector<Bracket> detect_transitions(const ThresholdCurve& curve, int jump_threshold) {
    std::vector<Bracket> out;
    for (std::size_t i = 1; i < curve.rows.size(); ++i) {
        const CurveRow& a = curve.rows[i - 1];
        const CurveRow& b = curve.rows[i];
        if (max_jump(a.thresholds, b.thresholds) >= jump_threshold) {
            out.push_back({a.q, b.q, a.thresholds, b.thresholds});
        }
    }
    return out;
}

Refinement refine_transition(const GrayDistribution& d, int classes, double q_low, double q_high,
                             int jump_threshold, double refine_tol) {
    if (!(q_low < q_high)) {
        throw InvalidArgument("bracket must satisfy q_low < q_high");
    }
    if (!(refine_tol > 0.0)) {
        throw InvalidArgument("refine_tol must be positive");
    }
    ThresholdSet below = optimize(d, classes, EntropicIndex(q_low)).thresholds;
    ThresholdSet above = optimize(d, classes, EntropicIndex(q_high)).thresholds;
    if (max_jump(below, above) < jump_threshold) {
        throw InvalidArgument("bracket endpoints do not differ by at least the jump threshold");
    }
    double lo = q_low;
    double hi = q_high;
    while (hi - lo > refine_tol) {
        const double mid = 0.5 * (lo + hi);
        const ThresholdSet at_mid = optimize(d, classes, EntropicIndex(mid)).thresholds;
        if (max_jump(below, at_mid) >= jump_threshold) {
            hi = mid;
            above = at_mid;
        } else if (max_jump(at_mid, above) >= jump_threshold) {
            lo = mid;
            below = at_mid;
        } else {
            return GradualChange{lo, hi, below, above};
        }
    }
    return Transition{lo, hi, 0.5 * (lo + hi), jumps(below, above), below, above};
}

TransitionReport analyze_transitions(const GrayDistribution& d, const ThresholdCurve& curve,
                                     const SweepConfig& cfg) {
    cfg.validate();
    TransitionReport report;
    for (const Bracket& b : detect_transitions(curve, cfg.jump_threshold)) {
        Refinement r = refine_transition(d, cfg.classes, b.q_low, b.q_high, cfg.jump_threshold, cfg.refine_tol);
        if (auto* t = std::get_if<Transition>(&r)) {
            report.transitions.push_back(std::move(*t));
        } else {
            report.gradual.push_back(std::get<GradualChange>(std::move(r)));
        }
    }
    return report;
}

}  // namespace tsallis
