#include "tsallis/threshold_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "tsallis/errors.hpp"
#include "tsallis/histogram.hpp"

namespace tsallis {

ThresholdSet::ThresholdSet(std::span<const int> levels) {
    if (levels.empty() || levels.size() > levels_.size()) {
        throw InvalidArgument("threshold count must be between 1 and " + std::to_string(levels_.size()));
    }
    int prev = -1;
    for (const int t : levels) {
        if (t < 0 || t > kMaxLevel - 1) {
            throw InvalidArgument("threshold " + std::to_string(t) + " outside [0, 254]");
        }
        if (t <= prev) {
            throw InvalidArgument("thresholds must be strictly increasing");
        }
        levels_[static_cast<std::size_t>(count_++)] = t;
        prev = t;
    }
}

LevelRange ThresholdSet::class_range(int j) const {
    if (j < 0 || j > count_) {
        throw InvalidArgument("class index out of range");
    }
    const int lo = j == 0 ? 0 : levels_[static_cast<std::size_t>(j - 1)] + 1;
    const int hi = j == count_ ? kMaxLevel : levels_[static_cast<std::size_t>(j)];
    return {lo, hi};
}

std::vector<LevelRange> ThresholdSet::class_ranges() const {
    std::vector<LevelRange> out;
    out.reserve(static_cast<std::size_t>(class_count()));
    for (int j = 0; j < class_count(); ++j) {
        out.push_back(class_range(j));
    }
    return out;
}

int ThresholdSet::class_of(int v) const noexcept {
    int j = 0;
    while (j < count_ && v > levels_[static_cast<std::size_t>(j)]) {
        ++j;
    }
    return j;
}

std::string ThresholdSet::join(char sep) const {
    std::string out;
    for (int j = 0; j < count_; ++j) {
        if (j > 0) {
            out += sep;
        }
        out += std::to_string(levels_[static_cast<std::size_t>(j)]);
    }
    return out;
}

ThresholdSet ThresholdSet::parse(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) {
            field.remove_prefix(1);
        }
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) {
            field.remove_suffix(1);
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw InvalidArgument("malformed threshold list '" + std::string(text) + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return ThresholdSet(values);
}

std::strong_ordering operator<=>(const ThresholdSet& a, const ThresholdSet& b) noexcept {
    const int n = std::min(a.count_, b.count_);
    for (int j = 0; j < n; ++j) {
        if (auto c = a.levels_[static_cast<std::size_t>(j)] <=> b.levels_[static_cast<std::size_t>(j)]; c != 0) {
            return c;
        }
    }
    return a.count_ <=> b.count_;
}

std::vector<int> jumps(const ThresholdSet& a, const ThresholdSet& b) {
    if (a.size() != b.size()) {
        throw InvalidArgument("threshold sets differ in arity");
    }
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int j = 0; j < a.size(); ++j) {
        out[static_cast<std::size_t>(j)] = std::abs(a[j] - b[j]);
    }
    return out;
}

int max_jump(const ThresholdSet& a, const ThresholdSet& b) {
    int best = 0;
    for (const int j : jumps(a, b)) {
        best = std::max(best, j);
    }
    return best;
}

}  // namespace tsallis
