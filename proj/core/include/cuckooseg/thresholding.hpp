#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "cuckooseg/gray_image.hpp"
#include "cuckooseg/rng.hpp"

namespace cuckooseg {

inline constexpr int kMinThreshold = 1;
inline constexpr int kMaxThreshold = 255;
inline constexpr int kMaxLevels = kMaxThreshold - kMinThreshold + 1;

/// A candidate solution: x strictly increasing thresholds in [1, 255].
/// x thresholds split the gray range into x + 1 classes, class j covering
/// [t_j, t_{j+1}) with sentinels t_0 = 0 and t_{x+1} = 256.
class ThresholdSet {
 public:
  /// Throws InvalidArgs unless values are non-empty, strictly increasing and
  /// within [1, 255].
  explicit ThresholdSet(std::vector<int> values);

  std::span<const int> values() const noexcept { return values_; }
  std::size_t levels() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }

  /// Re-checks the invariants; always true for a constructed object.
  static bool is_valid(std::span<const int> values) noexcept;

  friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;
  /// Lexicographic on the sorted values.
  friend auto operator<=>(const ThresholdSet&, const ThresholdSet&) = default;

 private:
  std::vector<int> values_;
};

/// Class partition of [0, 255] plus the gray value each class maps to.
struct ClassMap {
  std::vector<int> boundaries;       // [0, t_1, ..., t_x, 256]
  std::vector<int> representatives;  // x + 1 entries

  std::size_t classes() const noexcept { return representatives.size(); }
  std::size_t class_of(int gray) const;
  /// gray -> representative lookup table.
  std::array<std::uint8_t, kGrayLevels> lookup() const;

  friend bool operator==(const ClassMap&, const ClassMap&) = default;
};

struct SegmentationResult {
  ThresholdSet thresholds;
  ClassMap class_map;
  double fitness = 0.0;
};

/// x distinct thresholds drawn uniformly without replacement from [1, 255]
/// (partial Fisher-Yates over the pool 1..255, one uniform_below per pick).
/// Throws TooManyLevels if x > 255, InvalidArgs if x == 0.
ThresholdSet random_threshold_set(Rng& rng, std::size_t levels);

/// Maps arbitrary real proposals onto a valid ThresholdSet: round to nearest
/// (halves away from zero), clamp to [1, 255], sort, then move each collided
/// value to the nearest free integer above it, wrapping around to the lowest
/// free integer when nothing above 255 is free. NaN maps to 1.
/// Throws Unrepairable if raw.size() > 255, InvalidArgs if empty.
ThresholdSet repair(std::span<const double> raw);

/// Non-empty classes map to the rounded (half up) histogram-weighted mean of
/// their gray values; empty classes map to the floor midpoint of their range.
ClassMap class_representatives(const Histogram& hist, const ThresholdSet& thresholds);

/// Segmented image: every pixel replaced by its class representative.
GrayImage apply(const GrayImage& image, const ClassMap& class_map);

/// Pearson correlation between the image and its segmentation, computed from
/// the 256-bin histogram alone. Returns 0 when the segmentation is constant.
/// Throws DegenerateImage if the histogram describes a constant image.
double fitness_from_histogram(const Histogram& hist, const ThresholdSet& thresholds);
double fitness_from_histogram(const Histogram& hist, const ClassMap& class_map);

SegmentationResult segment(const Histogram& hist, const ThresholdSet& thresholds);

}  // namespace cuckooseg
