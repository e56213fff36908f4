#include "tsallis/entropy.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tsallis/errors.hpp"

namespace tsallis {

EntropicIndex::EntropicIndex(double q) : q_(q) {
    if (!std::isfinite(q) || !(q > 0.0)) {
        throw DomainError("entropic index q must be positive, got " + std::to_string(q));
    }
}

namespace {

void require_tsallis_form(EntropicIndex q) {
    if (q.is_shannon_limit()) {
        throw DomainError("q = 1 is the Shannon limit; use shannon_entropy");
    }
}

void require_unit_sum(std::span<const double> p) {
    double sum = 0.0;
    for (const double v : p) {
        if (!(v >= 0.0)) {
            throw DomainError("probabilities must be non-negative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kUnitSumTolerance) {
        throw DomainError("probabilities must sum to 1");
    }
}

// p^q for p > 0; zero bins contribute nothing.
double power(double p, double q) {
    return p > 0.0 ? std::exp(q * std::log(p)) : 0.0;
}

}  // namespace

double tsallis_entropy(std::span<const double> p, EntropicIndex q) {
    require_tsallis_form(q);
    require_unit_sum(p);
    double sum = 0.0;
    for (const double v : p) {
        sum += power(v, q.value());
    }
    return (sum - 1.0) / (1.0 - q.value());
}

double tsallis_entropy(const GrayDistribution& d, EntropicIndex q) {
    return tsallis_entropy(std::span<const double>(d.probs()), q);
}

double shannon_entropy(std::span<const double> p) {
    require_unit_sum(p);
    double h = 0.0;
    for (const double v : p) {
        if (v > 0.0) {
            h -= v * std::log(v);
        }
    }
    return h;
}

double shannon_entropy(const GrayDistribution& d) {
    return shannon_entropy(std::span<const double>(d.probs()));
}

double class_mass(const GrayDistribution& d, LevelRange range) {
    if (range.lo < 0 || range.hi > kMaxLevel || range.lo > range.hi) {
        throw InvalidArgument("level range outside [0, 255]");
    }
    double mass = 0.0;
    for (int i = range.lo; i <= range.hi; ++i) {
        mass += d[i];
    }
    return mass;
}

double class_entropy(const GrayDistribution& d, LevelRange range, EntropicIndex q) {
    require_tsallis_form(q);
    const double mass = class_mass(d, range);
    if (!(mass > 0.0)) {
        throw InvalidPartition("class [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) +
                               "] has zero probability mass");
    }
    double sum = 0.0;
    for (int i = range.lo; i <= range.hi; ++i) {
        sum += power(d[i] / mass, q.value());
    }
    return (sum - 1.0) / (1.0 - q.value());
}

double pseudo_additive_total(std::span<const double> class_entropies, EntropicIndex q) {
    if (q.is_shannon_limit()) {
        return std::accumulate(class_entropies.begin(), class_entropies.end(), 0.0);
    }
    // prod (1 + (1-q) S_j) - 1, evaluated in log space to keep small
    // entropies from cancelling against the 1.
    const double c = 1.0 - q.value();
    double log_prod = 0.0;
    for (const double s : class_entropies) {
        log_prod += std::log1p(c * s);
    }
    return std::expm1(log_prod) / c;
}

ClassDecomposition decompose(const GrayDistribution& d, const ThresholdSet& ts) {
    ClassDecomposition out{ts, {}, ts.class_ranges()};
    out.class_probs.reserve(out.class_ranges.size());
    for (const LevelRange& r : out.class_ranges) {
        out.class_probs.push_back(class_mass(d, r));
    }
    return out;
}

double total_entropy(const GrayDistribution& d, const ThresholdSet& ts, EntropicIndex q) {
    std::array<double, kMaxClasses> s{};
    const int m = ts.class_count();
    for (int j = 0; j < m; ++j) {
        s[static_cast<std::size_t>(j)] = class_entropy(d, ts.class_range(j), q);
    }
    return pseudo_additive_total(std::span<const double>(s.data(), static_cast<std::size_t>(m)), q);
}

}  // namespace tsallis
