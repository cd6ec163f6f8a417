#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "cuckooseg/gray_image.hpp"
#include "cuckooseg/thresholding.hpp"

namespace cuckooseg {

using BigCount = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(values, x). Throws InvalidArgs unless
/// 1 <= x <= values.
BigCount combination_count(unsigned values, unsigned x);

enum class Enumeration {
  /// One candidate per distinct partition of the gray values present in the
  /// histogram: each cut sits at the lowest threshold realizing it.
  Restricted,
  /// Every strictly increasing x-tuple over [1, 255].
  Unrestricted,
};

struct OracleOptions {
  std::uint64_t max_combinations = 10'000'000;
  Enumeration mode = Enumeration::Restricted;
  unsigned threads = 1;
};

struct OracleResult {
  SegmentationResult best;
  std::uint64_t enumerated = 0;  // fitness evaluations performed
};

/// Global maximum of fitness_from_histogram over all threshold sets of size x.
/// Ties resolve to the lexicographically smallest threshold tuple, so the
/// answer is identical for every mode and thread count.
///
/// Throws TooLarge when C(255, x) exceeds options.max_combinations (the
/// message carries both C(256, x) and C(255, x)), DegenerateImage for a
/// constant histogram and InvalidArgs for x outside [1, 255].
OracleResult exhaustive_best(const Histogram& hist, std::size_t x, const OracleOptions& options = {});

}  // namespace cuckooseg
