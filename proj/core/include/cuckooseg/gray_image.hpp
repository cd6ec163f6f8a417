#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cuckooseg {

inline constexpr int kGrayLevels = 256;
inline constexpr int kMaxGray = 255;

/// An M x N grid of 8-bit gray values stored row-major, top-left origin.
/// Immutable after construction.
class GrayImage {
 public:
  /// Throws DimensionMismatch when width or height is zero or when
  /// pixels.size() != width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  /// Validating constructor for untyped sample values; throws ValueOutOfRange
  /// for any value outside [0, 255].
  static GrayImage from_values(std::size_t width, std::size_t height, std::span<const int> values);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Gray-level occurrence counts. All fitness evaluation in the optimizer runs
/// on this 256-bin summary instead of the pixel grid.
struct Histogram {
  std::array<std::uint64_t, kGrayLevels> counts{};
  std::uint64_t total = 0;

  /// total is recomputed from the counts.
  static Histogram from_counts(const std::array<std::uint64_t, kGrayLevels>& counts);

  /// Gray values with a nonzero count, ascending.
  std::vector<int> present_values() const;
  std::size_t distinct_values() const noexcept;
  bool is_constant() const noexcept { return distinct_values() <= 1; }

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

Histogram histogram(const GrayImage& image) noexcept;

}  // namespace cuckooseg
