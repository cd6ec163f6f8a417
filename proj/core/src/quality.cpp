#include "cuckooseg/quality.hpp"

#include <string>
#include <vector>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.width()) + "x" + std::to_string(a.height()) + " vs " +
                    std::to_string(b.width()) + "x" + std::to_string(b.height()));
  }
}

std::vector<double> as_reals(const GrayImage& img) {
  return std::vector<double>(img.pixels().begin(), img.pixels().end());
}

}  // namespace

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "samples differ in length or are empty");
  }
  const double n = static_cast<double>(a.size());
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= n;
  mean_b /= n;

  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw Error(ErrorCode::DegenerateImage,
                std::string(var_a == 0.0 ? "first" : "second") +
                    " input has zero variance; correlation is undefined");
  }
  return cov / std::sqrt(var_a * var_b);
}

double correlation(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  return pearson(as_reals(a), as_reals(b));
}

double mse(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = int{pa[i]} - int{pb[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr(double mse_value) {
  if (!(mse_value >= 0.0)) {
    throw Error(ErrorCode::InvalidArgs, "mse must be non-negative, got " + std::to_string(mse_value));
  }
  if (mse_value == 0.0) return kInfinitePsnr;
  return 20.0 * std::log10(255.0 / std::sqrt(mse_value));
}

QualityReport assess(const GrayImage& original, const GrayImage& segmented) {
  QualityReport q;
  q.correlation = correlation(original, segmented);
  q.mse = mse(original, segmented);
  q.psnr = psnr(q.mse);
  return q;
}

}  // namespace cuckooseg
