#include "cuckooseg/gray_image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw Error(ErrorCode::DimensionMismatch, "image dimensions must be positive");
  }
  if (pixels_.size() != width_ * height_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(width_ * height_) + " pixels for " +
                    std::to_string(width_) + "x" + std::to_string(height_) + ", got " +
                    std::to_string(pixels_.size()));
  }
}

GrayImage GrayImage::from_values(std::size_t width, std::size_t height,
                                 std::span<const int> values) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < 0 || v > kMaxGray) {
      throw Error(ErrorCode::ValueOutOfRange,
                  "pixel " + std::to_string(i) + " has value " + std::to_string(v));
    }
    pixels.push_back(static_cast<std::uint8_t>(v));
  }
  return GrayImage(width, height, std::move(pixels));
}

Histogram Histogram::from_counts(const std::array<std::uint64_t, kGrayLevels>& counts) {
  Histogram h;
  h.counts = counts;
  h.total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  return h;
}

std::vector<int> Histogram::present_values() const {
  std::vector<int> values;
  for (int g = 0; g < kGrayLevels; ++g) {
    if (counts[g] != 0) values.push_back(g);
  }
  return values;
}

std::size_t Histogram::distinct_values() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c != 0; }));
}

Histogram histogram(const GrayImage& image) noexcept {
  Histogram h;
  for (const std::uint8_t p : image.pixels()) ++h.counts[p];
  h.total = image.size();
  return h;
}

}  // namespace cuckooseg
