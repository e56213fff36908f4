#include "tsallis/optimizer.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "tsallis/errors.hpp"

namespace tsallis {

namespace {

// Per-interval class factors for one (d, q) pair. For the class [lo, hi]
// with mass P, factor = sum_i (p_i / P)^q = 1 + (1-q) S, stored as its log.
// Sums run left to right from lo, the same order a direct evaluation uses.
class IntervalTable {
public:
    IntervalTable(const GrayDistribution& d, double q) : one_minus_q_(1.0 - q) {
        for (int lo = 0; lo < kLevels; ++lo) {
            double mass = 0.0;
            double power_sum = 0.0;
            for (int hi = lo; hi < kLevels; ++hi) {
                const double p = d[hi];
                if (p > 0.0) {
                    mass += p;
                    power_sum += std::exp(q * std::log(p));
                }
                const std::size_t k = index(lo, hi);
                occupied_[k] = mass > 0.0;
                log_factor_[k] = mass > 0.0 ? std::log(power_sum) - q * std::log(mass) : 0.0;
            }
        }
        int occ = 0;
        for (int t = kMaxLevel; t >= 0; --t) {
            occupied_above_[static_cast<std::size_t>(t)] = occ;
            if (d[t] > 0.0) {
                ++occ;
            }
        }
    }

    bool occupied(int lo, int hi) const { return occupied_[index(lo, hi)]; }
    double log_factor(int lo, int hi) const { return log_factor_[index(lo, hi)]; }
    // Occupied levels strictly above t.
    int occupied_above(int t) const { return occupied_above_[static_cast<std::size_t>(t)]; }
    double score(double log_product) const { return std::expm1(log_product) / one_minus_q_; }

private:
    static std::size_t index(int lo, int hi) { return static_cast<std::size_t>(lo) * kLevels + hi; }

    double one_minus_q_;
    std::vector<double> log_factor_ = std::vector<double>(kLevels * kLevels);
    std::vector<bool> occupied_ = std::vector<bool>(kLevels * kLevels);
    std::array<int, kLevels> occupied_above_{};
};

void validate_request(const GrayDistribution& d, int classes, EntropicIndex q) {
    if (!(q.value() > 0.0 && q.value() < 1.0)) {
        throw DomainError("threshold optimization requires q in (0, 1), got " + std::to_string(q.value()));
    }
    if (classes < 2 || classes > kMaxClasses) {
        throw InvalidArgument("class count must be between 2 and " + std::to_string(kMaxClasses));
    }
    if (d.occupied_levels() < classes) {
        throw InfeasiblePartition("distribution has " + std::to_string(d.occupied_levels()) +
                                  " occupied gray levels, fewer than the " + std::to_string(classes) +
                                  " requested classes");
    }
}

// Calls visit(levels, count, log_product) for every candidate whose classes
// are all non-empty, in lexicographic order. The total entropy is
// table.score(log_product), increasing in log_product. visit returns false
// to stop.
template <typename Visit>
bool enumerate(const IntervalTable& table, int classes, Visit&& visit) {
    std::array<int, kMaxClasses - 1> levels{};
    const int n = classes - 1;

    auto recurse = [&](auto&& self, int depth, int lo, double log_product) -> bool {
        const int classes_left = classes - depth - 1;  // after the class ending at t
        for (int t = lo; t <= kMaxLevel - 1; ++t) {
            if (table.occupied_above(t) < classes_left) {
                break;
            }
            if (!table.occupied(lo, t)) {
                continue;
            }
            levels[static_cast<std::size_t>(depth)] = t;
            const double lp = log_product + table.log_factor(lo, t);
            if (depth + 1 == n) {
                if (!visit(levels, n, lp + table.log_factor(t + 1, kMaxLevel))) {
                    return false;
                }
            } else if (!self(self, depth + 1, t + 1, lp)) {
                return false;
            }
        }
        return true;
    };
    return recurse(recurse, 0, 0, 0.0);
}

bool is_tie_or_better(double value, double best) {
    return value >= best - kTieRelTolerance * std::abs(best);
}

ThresholdSet make_set(const std::array<int, kMaxClasses - 1>& levels, int n) {
    return ThresholdSet(std::span<const int>(levels.data(), static_cast<std::size_t>(n)));
}

}  // namespace

OptimizationResult optimize(const GrayDistribution& d, int classes, EntropicIndex q) {
    validate_request(d, classes, q);
    const IntervalTable table(d, q.value());

    double best_log = -std::numeric_limits<double>::infinity();
    enumerate(table, classes, [&](const auto&, int, double lp) {
        if (lp > best_log) {
            best_log = lp;
        }
        return true;
    });

    // First candidate in lexicographic order that ties the maximum, with the
    // tie cutoff on the entropy scale mapped back to log-product scale.
    const double best = table.score(best_log);
    const double cutoff = std::log1p((best - kTieRelTolerance * std::abs(best)) * (1.0 - q.value()));
    std::array<int, kMaxClasses - 1> chosen{};
    enumerate(table, classes, [&](const auto& levels, int, double lp) {
        if (lp >= cutoff) {
            chosen = levels;
            return false;
        }
        return true;
    });

    ThresholdSet ts = make_set(chosen, classes - 1);
    const double entropy = total_entropy(d, ts, q);
    return {ts, entropy, q};
}

void for_each_candidate(const GrayDistribution& d, int classes, EntropicIndex q,
                        const std::function<void(const ThresholdSet&, double)>& visit) {
    validate_request(d, classes, q);
    const IntervalTable table(d, q.value());
    enumerate(table, classes, [&](const auto& levels, int n, double lp) {
        visit(make_set(levels, n), table.score(lp));
        return true;
    });
}

std::vector<LandscapeRow> entropy_landscape(const GrayDistribution& d, int classes, EntropicIndex q) {
    std::vector<LandscapeRow> rows;
    for_each_candidate(d, classes, q, [&](const ThresholdSet& ts, double s) { rows.push_back({ts, s}); });
    return rows;
}

const LandscapeRow& select_maximum(std::span<const LandscapeRow> rows) {
    if (rows.empty()) {
        throw InvalidArgument("empty landscape");
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const LandscapeRow& r : rows) {
        best = std::max(best, r.entropy);
    }
    for (const LandscapeRow& r : rows) {
        if (is_tie_or_better(r.entropy, best)) {
            return r;
        }
    }
    return rows.front();  // unreachable: the maximum itself qualifies
}

}  // namespace tsallis
