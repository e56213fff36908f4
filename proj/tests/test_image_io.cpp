#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "support/synthetic.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/image_io.hpp"

namespace fs = std::filesystem;
using namespace tsallis;

namespace {

class ImageIoTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("tsallis_io_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_bytes(const std::string& name, const std::string& bytes) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << bytes;
        return p;
    }

    fs::path dir_;
};

TEST_F(ImageIoTest, ReadsPlainPgm) {
    const auto p = write_bytes("a.pgm", "P2\n2 2\n255\n0 10\n200 255\n");
    const GrayImage img = read_image(p);
    EXPECT_EQ(img, GrayImage(2, 2, {0, 10, 200, 255}));
}

TEST_F(ImageIoTest, PlainAndBinaryEncodingsAgree) {
    const auto plain = write_bytes("p2.pgm", "P2\n# comment line\n3 1 # trailing\n255\n7 128\n255\n");
    const auto binary = write_bytes("p5.pgm", std::string("P5\n3 1\n255\n") + "\x07\x80\xff");
    EXPECT_EQ(read_image(plain), read_image(binary));
}

TEST_F(ImageIoTest, RejectsSixteenBitMaxval) {
    const auto p = write_bytes("wide.pgm", "P2\n1 1\n65535\n1000\n");
    EXPECT_THROW(read_image(p), FormatError);
}

TEST_F(ImageIoTest, RejectsMalformedHeadersAndRasters) {
    EXPECT_THROW(read_image(write_bytes("m1.pgm", "P6\n1 1\n255\nabc")), FormatError);
    EXPECT_THROW(read_image(write_bytes("m2.pgm", "P2\n2 x\n255\n")), FormatError);
    EXPECT_THROW(read_image(write_bytes("m3.pgm", "P5\n4 4\n255\n\x01\x02")), FormatError);
    EXPECT_THROW(read_image(write_bytes("m4.pgm", "P2\n1 1\n255\n300\n")), FormatError);
    EXPECT_THROW(read_image(write_bytes("m5.pgm", "P2\n0 1\n255\n")), FormatError);
}

TEST_F(ImageIoTest, MissingFileIsIoError) {
    EXPECT_THROW(read_image(dir_ / "does_not_exist.pgm"), IoError);
}

TEST_F(ImageIoTest, WritesBinaryPgm) {
    const fs::path p = dir_ / "one.pgm";
    write_image(GrayImage(1, 1, {128}), p);
    std::ifstream in(p, std::ios::binary);
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(bytes, std::string("P5\n1 1\n255\n\x80"));
}

TEST_F(ImageIoTest, TwoPixelRoundTrip) {
    const fs::path p = dir_ / "two.pgm";
    const GrayImage img(2, 1, {0, 255});
    write_image(img, p);
    EXPECT_EQ(read_image(p), img);
}

TEST_F(ImageIoTest, UnwritableLocationIsIoError) {
    EXPECT_THROW(write_image(GrayImage(1, 1, {0}), dir_ / "no_such_dir" / "x.pgm"), IoError);
}

TEST_F(ImageIoTest, RandomImagesRoundTrip) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const GrayImage img = synthetic::random_image(rng);
        EXPECT_EQ(decode_pgm(encode_pgm(img)), img);
    }
}

TEST_F(ImageIoTest, ReadsGrayPng) {
    if (!png_supported()) GTEST_SKIP() << "built without PNG";
    // 2x2 8-bit grayscale PNG holding 0 10 / 200 255.
    const unsigned char gray[] = {
        0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a, 0x00, 0x00, 0x00, 0x0d, 0x49, 0x48, 0x44, 0x52,
        0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02, 0x08, 0x00, 0x00, 0x00, 0x00, 0x57, 0xdd, 0x52,
        0xf8, 0x00, 0x00, 0x00, 0x0e, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9c, 0x63, 0x60, 0xe0, 0x62, 0x38,
        0xf1, 0x1f, 0x00, 0x02, 0xbd, 0x01, 0xd2, 0xe2, 0x4e, 0xf6, 0x8d, 0x00, 0x00, 0x00, 0x00, 0x49,
        0x45, 0x4e, 0x44, 0xae, 0x42, 0x60, 0x82};
    const auto p = write_bytes("gray.png", std::string(reinterpret_cast<const char*>(gray), sizeof gray));
    EXPECT_EQ(read_image(p), GrayImage(2, 2, {0, 10, 200, 255}));
}

TEST_F(ImageIoTest, RejectsNonGrayPng) {
    if (!png_supported()) GTEST_SKIP() << "built without PNG";
    // 1x1 RGB PNG (color type 2).
    const unsigned char rgb[] = {
        0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a, 0x00, 0x00, 0x00, 0x0d, 0x49, 0x48, 0x44, 0x52,
        0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x08, 0x02, 0x00, 0x00, 0x00, 0x90, 0x77, 0x53,
        0xde, 0x00, 0x00, 0x00, 0x0c, 0x49, 0x44, 0x41, 0x54, 0x08, 0xd7, 0x63, 0xf8, 0xcf, 0xc0, 0x00,
        0x00, 0x03, 0x01, 0x01, 0x00, 0x18, 0xdd, 0x8d, 0xb0, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4e,
        0x44, 0xae, 0x42, 0x60, 0x82};
    const auto p = write_bytes("rgb.png", std::string(reinterpret_cast<const char*>(rgb), sizeof rgb));
    EXPECT_THROW(read_image(p), FormatError);
}

TEST(GrayImage, RejectsSizeMismatch) {
    EXPECT_THROW(GrayImage(2, 2, {1, 2, 3}), InvalidArgument);
    EXPECT_THROW(GrayImage(0, 1, {}), InvalidArgument);
}

}  // namespace
