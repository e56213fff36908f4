#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tsallis {

inline constexpr int kMaxClasses = 5;

/// Inclusive interval of gray levels [lo, hi].
struct LevelRange {
    int lo;
    int hi;

    int width() const noexcept { return hi - lo + 1; }
    friend bool operator==(const LevelRange&, const LevelRange&) = default;
};

/// Strictly increasing thresholds t_1 < ... < t_{m-1} in [0, 254].
/// Class j covers (t_{j-1}, t_j] with t_0 = -1 and t_m = 255.
class ThresholdSet {
public:
    /// Throws InvalidArgument unless 1 <= size <= kMaxClasses - 1, strictly
    /// increasing, and each value in [0, 254].
    explicit ThresholdSet(std::span<const int> levels);
    ThresholdSet(std::initializer_list<int> levels)
        : ThresholdSet(std::span<const int>(levels.begin(), levels.size())) {}
    explicit ThresholdSet(const std::vector<int>& levels) : ThresholdSet(std::span<const int>(levels)) {}

    int class_count() const noexcept { return count_ + 1; }
    int size() const noexcept { return count_; }
    int operator[](int j) const { return levels_.at(static_cast<std::size_t>(j)); }
    std::span<const int> levels() const noexcept { return {levels_.data(), static_cast<std::size_t>(count_)}; }

    LevelRange class_range(int j) const;
    std::vector<LevelRange> class_ranges() const;

    /// Class index of gray value `v`.
    int class_of(int v) const noexcept;

    /// Thresholds joined by `sep`, e.g. "84;169".
    std::string join(char sep) const;

    /// Parses "t1,t2,..." (whitespace tolerated). Throws InvalidArgument.
    static ThresholdSet parse(std::string_view text);

    friend bool operator==(const ThresholdSet& a, const ThresholdSet& b) noexcept {
        return a.count_ == b.count_ && a.levels_ == b.levels_;
    }
    /// Lexicographic order on the threshold tuple.
    friend std::strong_ordering operator<=>(const ThresholdSet& a, const ThresholdSet& b) noexcept;

private:
    std::array<int, kMaxClasses - 1> levels_{};
    int count_ = 0;
};

/// Largest absolute per-threshold difference between two sets of equal arity.
int max_jump(const ThresholdSet& a, const ThresholdSet& b);

/// Per-threshold absolute differences.
std::vector<int> jumps(const ThresholdSet& a, const ThresholdSet& b);

}  // namespace tsallis
