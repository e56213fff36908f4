#include <gtest/gtest.h>

#include <random>

#include "support/synthetic.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/segmenter.hpp"

using namespace tsallis;

TEST(LevelMap, EvenlySpacedTones) {
    const LevelMap two = LevelMap::evenly_spaced(2);
    EXPECT_EQ(two[0], 0);
    EXPECT_EQ(two[1], 255);
    const LevelMap three = LevelMap::evenly_spaced(3);
    EXPECT_EQ(three[1], 128);
    const LevelMap five = LevelMap::evenly_spaced(5);
    const int expected[] = {0, 64, 128, 191, 255};
    for (int j = 0; j < 5; ++j) EXPECT_EQ(five[j], expected[j]);
}

TEST(LevelMap, RejectsNonIncreasing) {
    EXPECT_THROW(LevelMap({0, 0}), InvalidArgument);
    EXPECT_THROW(LevelMap({10, 5}), InvalidArgument);
    EXPECT_THROW(LevelMap({0, 256}), InvalidArgument);
    EXPECT_THROW(LevelMap({7}), InvalidArgument);
}

TEST(ApplyThresholds, BoundaryPixelGoesBlack) {
    const GrayImage img(4, 1, {10, 97, 98, 200});
    const GrayImage out = apply_thresholds(img, ThresholdSet{97}, LevelMap({0, 255}));
    EXPECT_EQ(out, GrayImage(4, 1, {0, 0, 255, 255}));
}

TEST(ApplyThresholds, ThreeClassMembership) {
    const GrayImage img(4, 1, {84, 85, 169, 170});
    const GrayImage out = apply_thresholds(img, ThresholdSet{84, 169}, LevelMap({0, 128, 255}));
    EXPECT_EQ(out, GrayImage(4, 1, {0, 128, 128, 255}));
}

TEST(ApplyThresholds, ArityMismatch) {
    EXPECT_THROW(apply_thresholds(synthetic::ramp(), ThresholdSet{84, 169}, LevelMap({0, 255})), InvalidArgument);
}

TEST(ThresholdSet, RejectsEmptyAndUnordered) {
    EXPECT_THROW(ThresholdSet(std::vector<int>{}), InvalidArgument);
    EXPECT_THROW((ThresholdSet{169, 84}), InvalidArgument);
    EXPECT_THROW((ThresholdSet{3, 3}), InvalidArgument);
    EXPECT_THROW(ThresholdSet{255}, InvalidArgument);
    EXPECT_THROW(ThresholdSet{-1}, InvalidArgument);
    EXPECT_THROW((ThresholdSet{1, 2, 3, 4, 5}), InvalidArgument);
    EXPECT_EQ(ThresholdSet::parse(" 84, 169"), (ThresholdSet{84, 169}));
    EXPECT_THROW(ThresholdSet::parse("84,,169"), InvalidArgument);
    EXPECT_THROW(ThresholdSet::parse("abc"), InvalidArgument);
}

TEST(ApplyThresholds, OutputPropertiesOnRandomImages) {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> level(0, 254);
    for (int trial = 0; trial < 50; ++trial) {
        const GrayImage img = synthetic::random_image(rng);
        int a = level(rng), b = level(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const ThresholdSet ts{a, b};
        // Map each class tone inside its own interval so idempotence applies.
        const LevelMap map({a, b, 255});
        const GrayImage out = apply_thresholds(img, ts, map);
        for (std::size_t i = 0; i < out.size(); ++i) {
            const int v = out.pixels()[i];
            ASSERT_TRUE(v == a || v == b || v == 255);
            ASSERT_EQ(v, map[ts.class_of(img.pixels()[i])]);  // per-pixel rule
        }
        EXPECT_EQ(apply_thresholds(out, ts, map), out);
    }
}
