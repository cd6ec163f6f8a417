#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's histogram or fitness code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cuckooseg/gray_image.hpp"

namespace cuckooseg::testing {

inline GrayImage random_image(std::mt19937_64& gen, std::size_t width, std::size_t height,
                              int lo = 0, int hi = 255) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::vector<std::uint8_t> px(width * height);
  for (auto& p : px) p = static_cast<std::uint8_t>(value(gen));
  return GrayImage(width, height, std::move(px));
}

/// Non-constant random image with dimensions in [1..max_side]^2, area >= 2.
inline GrayImage random_nonconstant_image(std::mt19937_64& gen, std::size_t max_side) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_int_distribution<int> palette_size(2, 256);
  while (true) {
    const std::size_t w = side(gen);
    const std::size_t h = side(gen);
    if (w * h < 2) continue;
    // Mix of rich and few-valued images.
    const int k = palette_size(gen);
    std::vector<int> palette(256);
    for (int g = 0; g < 256; ++g) palette[g] = g;
    std::shuffle(palette.begin(), palette.end(), gen);
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::vector<std::uint8_t> px(w * h);
    for (auto& p : px) p = static_cast<std::uint8_t>(palette[pick(gen)]);
    if (std::any_of(px.begin(), px.end(), [&](auto v) { return v != px[0]; })) {
      return GrayImage(w, h, std::move(px));
    }
  }
}

/// Two clipped Gaussian gray clusters, half the pixels each.
inline GrayImage bimodal_image(std::mt19937_64& gen, std::size_t side, double mean_lo,
                               double mean_hi, double sigma) {
  std::normal_distribution<double> lo(mean_lo, sigma);
  std::normal_distribution<double> hi(mean_hi, sigma);
  std::vector<std::uint8_t> px(side * side);
  for (std::size_t i = 0; i < px.size(); ++i) {
    const double v = (i % 2 == 0) ? lo(gen) : hi(gen);
    px[i] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
  }
  std::shuffle(px.begin(), px.end(), gen);
  return GrayImage(side, side, std::move(px));
}

inline std::vector<int> random_thresholds(std::mt19937_64& gen, std::size_t x) {
  std::vector<int> pool(255);
  for (int i = 0; i < 255; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), gen);
  std::vector<int> t(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(x));
  std::sort(t.begin(), t.end());
  return t;
}

/// Class index of a gray value by linear scan over sorted thresholds.
inline std::size_t brute_class(int gray, const std::vector<int>& thresholds) {
  std::size_t c = 0;
  for (const int t : thresholds) {
    if (gray >= t) ++c;
  }
  return c;
}

/// Pixel-domain segmentation: class means computed by averaging pixels
/// directly (rounded half up), empty classes at their floor midpoint.
inline std::vector<int> brute_segment(const GrayImage& img, const std::vector<int>& thresholds) {
  const std::size_t classes = thresholds.size() + 1;
  std::vector<long long> sum(classes, 0);
  std::vector<long long> count(classes, 0);
  for (const auto p : img.pixels()) {
    const auto c = brute_class(p, thresholds);
    sum[c] += p;
    ++count[c];
  }
  std::vector<int> rep(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    const int lo = c == 0 ? 0 : thresholds[c - 1];
    const int hi = c == thresholds.size() ? 256 : thresholds[c];
    rep[c] = count[c] == 0 ? (lo + hi - 1) / 2
                           : static_cast<int>(std::floor(static_cast<long double>(sum[c]) / count[c] + 0.5L));
  }
  std::vector<int> out;
  out.reserve(img.size());
  for (const auto p : img.pixels()) out.push_back(rep[brute_class(p, thresholds)]);
  return out;
}

/// Pearson correlation in extended precision, straight from
/// the pixel grids. Returns 0 if the second grid is constant.
inline long double pixel_correlation(const std::vector<int>& a, const std::vector<int>& b) {
  const long double n = static_cast<long double>(a.size());
  long double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double cov = 0, va = 0, vb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - ma) * (b[i] - mb) / n;
    va += (a[i] - ma) * (a[i] - ma) / n;
    vb += (b[i] - mb) * (b[i] - mb) / n;
  }
  if (vb == 0) return 0;
  return cov / (std::sqrt(va) * std::sqrt(vb));
}

inline std::vector<int> as_ints(const GrayImage& img) {
  return std::vector<int>(img.pixels().begin(), img.pixels().end());
}

/// Brute-force fitness: segment in the pixel domain, correlate in the pixel domain.
inline double brute_fitness(const GrayImage& img, const std::vector<int>& thresholds) {
  return static_cast<double>(pixel_correlation(as_ints(img), brute_segment(img, thresholds)));
}

struct BruteOptimum {
  double fitness = -2.0;
  std::vector<int> thresholds;
};

/// Enumerates every x-tuple over [1,255] for x in {1, 2} in the pixel
/// domain; ties keep the lexicographically first tuple.
inline BruteOptimum brute_optimum(const GrayImage& img, std::size_t x) {
  BruteOptimum best;
  auto consider = [&](std::vector<int> t) {
    const double f = brute_fitness(img, t);
    if (f > best.fitness) best = {f, std::move(t)};
  };
  if (x == 1) {
    for (int a = 1; a <= 255; ++a) consider({a});
  } else {
    for (int a = 1; a <= 255; ++a)
      for (int b = a + 1; b <= 255; ++b) consider({a, b});
  }
  return best;
}

}  // namespace cuckooseg::testing
