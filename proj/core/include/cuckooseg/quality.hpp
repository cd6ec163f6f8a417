#pragma once

#include <cmath>
#include <limits>
#include <span>

#include "cuckooseg/gray_image.hpp"

namespace cuckooseg {

/// PSNR of a zero-error pair. Serialized as "inf".
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct QualityReport {
  double correlation = 0.0;
  double mse = 0.0;
  double psnr = kInfinitePsnr;  // decibels, or kInfinitePsnr when mse == 0

  bool psnr_is_infinite() const noexcept { return std::isinf(psnr); }
};

/// Pearson correlation of two equally long real-valued samples.
/// Throws DimensionMismatch, or DegenerateImage if either has zero variance.
double pearson(std::span<const double> a, std::span<const double> b);

/// Pearson correlation over all pixels, normalized by 1/(M N).
/// Throws DimensionMismatch, or DegenerateImage if either image is constant.
double correlation(const GrayImage& a, const GrayImage& b);

/// Mean squared gray-level difference. Throws DimensionMismatch.
double mse(const GrayImage& a, const GrayImage& b);

/// 20 log10(255 / sqrt(mse)); kInfinitePsnr for mse == 0. Throws InvalidArgs
/// for negative or NaN input.
double psnr(double mse_value);

/// All three measures for an (original, segmented) pair.
QualityReport assess(const GrayImage& original, const GrayImage& segmented);

}  // namespace cuckooseg
