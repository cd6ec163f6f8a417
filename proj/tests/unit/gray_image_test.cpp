#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cuckooseg/error.hpp"
#include "cuckooseg/gray_image.hpp"
#include "test_support.hpp"

namespace cuckooseg {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidArgs;
}

TEST(GrayImage, ConstructsFromValues) {
  const std::vector<int> v{0, 0, 255, 128};
  const GrayImage img = GrayImage::from_values(2, 2, v);
  EXPECT_EQ(img.width(), 2u);
  EXPECT_EQ(img.height(), 2u);
  EXPECT_EQ(img.at(0, 1), 255);
  EXPECT_EQ(img.at(1, 1), 128);
}

TEST(GrayImage, RejectsWrongPixelCount) {
  const std::vector<int> v{0, 0, 255};
  EXPECT_EQ(code_of([&] { GrayImage::from_values(2, 2, v); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { GrayImage(0, 3, {}); }), ErrorCode::DimensionMismatch);
}

TEST(GrayImage, RejectsOutOfRangeValues) {
  const std::vector<int> high{256};
  const std::vector<int> low{-1};
  EXPECT_EQ(code_of([&] { GrayImage::from_values(1, 1, high); }), ErrorCode::ValueOutOfRange);
  EXPECT_EQ(code_of([&] { GrayImage::from_values(1, 1, low); }), ErrorCode::ValueOutOfRange);
}

TEST(Histogram, CountsByInspection) {
  const std::vector<int> v{0, 0, 255, 128};
  const Histogram h = histogram(GrayImage::from_values(2, 2, v));
  EXPECT_EQ(h.total, 4u);
  EXPECT_EQ(h.counts[0], 2u);
  EXPECT_EQ(h.counts[128], 1u);
  EXPECT_EQ(h.counts[255], 1u);
  EXPECT_EQ(h.distinct_values(), 3u);
  EXPECT_EQ(h.present_values(), (std::vector<int>{0, 128, 255}));
}

TEST(Histogram, ConstantImage) {
  const Histogram h = histogram(GrayImage(3, 3, std::vector<std::uint8_t>(9, 7)));
  EXPECT_EQ(h.counts[7], 9u);
  EXPECT_EQ(h.total, 9u);
  EXPECT_TRUE(h.is_constant());
}

TEST(Histogram, PermutationImageHasFlatHistogram) {
  std::vector<std::uint8_t> px(256);
  for (int g = 0; g < 256; ++g) px[g] = static_cast<std::uint8_t>(255 - g);
  const Histogram h = histogram(GrayImage(16, 16, px));
  EXPECT_EQ(h.total, 256u);
  for (int g = 0; g < 256; ++g) EXPECT_EQ(h.counts[g], 1u) << g;
}

TEST(HistogramProperty, TotalsShuffleInvarianceAndMultisetReconstruction) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const GrayImage img = testing::random_nonconstant_image(gen, 40);
    const Histogram h = histogram(img);

    std::uint64_t sum = 0;
    for (const auto c : h.counts) sum += c;
    EXPECT_EQ(sum, img.width() * img.height());
    EXPECT_EQ(h.total, sum);

    std::vector<std::uint8_t> shuffled(img.pixels().begin(), img.pixels().end());
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_EQ(histogram(GrayImage(img.width(), img.height(), shuffled)), h);

    std::vector<std::uint8_t> rebuilt;
    for (int g = 0; g < 256; ++g) rebuilt.insert(rebuilt.end(), h.counts[g], static_cast<std::uint8_t>(g));
    std::vector<std::uint8_t> original(img.pixels().begin(), img.pixels().end());
    std::sort(original.begin(), original.end());
    EXPECT_EQ(rebuilt, original);
  }
}

}  // namespace
}  // namespace cuckooseg
