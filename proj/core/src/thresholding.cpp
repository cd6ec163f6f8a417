#include "cuckooseg/thresholding.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <numeric>
#include <string>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

bool ThresholdSet::is_valid(std::span<const int> values) noexcept {
  if (values.empty() || values.size() > static_cast<std::size_t>(kMaxLevels)) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < kMinThreshold || values[i] > kMaxThreshold) return false;
    if (i > 0 && values[i] <= values[i - 1]) return false;
  }
  return true;
}

ThresholdSet::ThresholdSet(std::vector<int> values) : values_(std::move(values)) {
  if (!is_valid(values_)) {
    throw Error(ErrorCode::InvalidArgs,
                "thresholds must be non-empty, strictly increasing, within [1, 255]");
  }
}

std::size_t ClassMap::class_of(int gray) const {
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), gray);
  return static_cast<std::size_t>(it - boundaries.begin()) - 1;
}

std::array<std::uint8_t, kGrayLevels> ClassMap::lookup() const {
  std::array<std::uint8_t, kGrayLevels> lut{};
  for (std::size_t j = 0; j + 1 < boundaries.size(); ++j) {
    for (int g = boundaries[j]; g < boundaries[j + 1]; ++g) {
      lut[g] = static_cast<std::uint8_t>(representatives[j]);
    }
  }
  return lut;
}

ThresholdSet random_threshold_set(Rng& rng, std::size_t levels) {
  if (levels == 0) throw Error(ErrorCode::InvalidArgs, "at least one threshold is required");
  if (levels > static_cast<std::size_t>(kMaxLevels)) {
    throw Error(ErrorCode::TooManyLevels,
                std::to_string(levels) + " thresholds requested, at most 255 exist");
  }
  std::array<int, kMaxLevels> pool{};
  std::iota(pool.begin(), pool.end(), kMinThreshold);
  for (std::size_t k = 0; k < levels; ++k) {
    const std::size_t j = k + static_cast<std::size_t>(rng.uniform_below(kMaxLevels - k));
    std::swap(pool[k], pool[j]);
  }
  std::vector<int> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(levels));
  std::sort(chosen.begin(), chosen.end());
  return ThresholdSet(std::move(chosen));
}

ThresholdSet repair(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorCode::InvalidArgs, "cannot repair an empty proposal");
  if (raw.size() > static_cast<std::size_t>(kMaxLevels)) {
    throw Error(ErrorCode::Unrepairable,
                std::to_string(raw.size()) + " values cannot be distinct within [1, 255]");
  }

  std::vector<int> values;
  values.reserve(raw.size());
  for (const double r : raw) {
    // Clamp in floating point first so infinities never reach the integer cast.
    const double clamped = std::isnan(r) ? kMinThreshold
                                         : std::clamp(std::round(r), double{kMinThreshold},
                                                      double{kMaxThreshold});
    values.push_back(static_cast<int>(clamped));
  }
  std::sort(values.begin(), values.end());

  std::bitset<kGrayLevels> used;
  for (int& v : values) {
    int candidate = v;
    while (candidate <= kMaxThreshold && used[candidate]) ++candidate;
    if (candidate > kMaxThreshold) {
      candidate = kMinThreshold;
      while (used[candidate]) ++candidate;
    }
    used.set(candidate);
    v = candidate;
  }
  std::sort(values.begin(), values.end());
  return ThresholdSet(std::move(values));
}

ClassMap class_representatives(const Histogram& hist, const ThresholdSet& thresholds) {
  ClassMap map;
  map.boundaries.reserve(thresholds.levels() + 2);
  map.boundaries.push_back(0);
  for (const int t : thresholds.values()) map.boundaries.push_back(t);
  map.boundaries.push_back(kGrayLevels);

  map.representatives.reserve(thresholds.levels() + 1);
  for (std::size_t j = 0; j + 1 < map.boundaries.size(); ++j) {
    const int lo = map.boundaries[j];
    const int hi = map.boundaries[j + 1];
    std::uint64_t count = 0;
    std::uint64_t weighted = 0;
    for (int g = lo; g < hi; ++g) {
      count += hist.counts[g];
      weighted += static_cast<std::uint64_t>(g) * hist.counts[g];
    }
    if (count == 0) {
      map.representatives.push_back((lo + hi - 1) / 2);
    } else {
      // round(weighted / count), halves up, in exact integer arithmetic
      map.representatives.push_back(static_cast<int>((2 * weighted + count) / (2 * count)));
    }
  }
  return map;
}

GrayImage apply(const GrayImage& image, const ClassMap& class_map) {
  const auto lut = class_map.lookup();
  std::vector<std::uint8_t> out;
  out.reserve(image.size());
  for (const std::uint8_t p : image.pixels()) out.push_back(lut[p]);
  return GrayImage(image.width(), image.height(), std::move(out));
}

double fitness_from_histogram(const Histogram& hist, const ClassMap& class_map) {
  if (hist.total < 2 || hist.is_constant()) {
    throw Error(ErrorCode::DegenerateImage,
                "original image has zero gray-level variance; correlation is undefined");
  }
  const auto lut = class_map.lookup();
  const double total = static_cast<double>(hist.total);

  double sum_orig = 0.0;
  double sum_seg = 0.0;
  for (int g = 0; g < kGrayLevels; ++g) {
    const double n = static_cast<double>(hist.counts[g]);
    sum_orig += g * n;
    sum_seg += lut[g] * n;
  }
  const double mean_orig = sum_orig / total;
  const double mean_seg = sum_seg / total;

  double cov = 0.0;
  double var_orig = 0.0;
  double var_seg = 0.0;
  for (int g = 0; g < kGrayLevels; ++g) {
    if (hist.counts[g] == 0) continue;
    const double n = static_cast<double>(hist.counts[g]);
    const double di = g - mean_orig;
    const double ds = lut[g] - mean_seg;
    cov += di * ds * n;
    var_orig += di * di * n;
    var_seg += ds * ds * n;
  }
  if (var_seg == 0.0) return 0.0;
  return cov / std::sqrt(var_orig * var_seg);
}

double fitness_from_histogram(const Histogram& hist, const ThresholdSet& thresholds) {
  return fitness_from_histogram(hist, class_representatives(hist, thresholds));
}

SegmentationResult segment(const Histogram& hist, const ThresholdSet& thresholds) {
  ClassMap map = class_representatives(hist, thresholds);
  const double fitness = fitness_from_histogram(hist, map);
  return SegmentationResult{thresholds, std::move(map), fitness};
}

}  // namespace cuckooseg
