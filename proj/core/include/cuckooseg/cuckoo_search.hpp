#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cuckooseg/gray_image.hpp"
#include "cuckooseg/levy.hpp"
#include "cuckooseg/rng.hpp"
#include "cuckooseg/thresholding.hpp"

namespace cuckooseg {

struct SearchParams {
  std::size_t nests = 20;
  std::size_t generations = 50;
  double pa = 0.25;
  LevyParams levy{};
  std::size_t levels = 1;
  std::uint64_t seed = 0;

  /// Throws InvalidParams (or InvalidBeta via levy) on out-of-range fields.
  void validate() const;

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
};

struct Nest {
  ThresholdSet thresholds;
  double fitness = 0.0;

  friend bool operator==(const Nest&, const Nest&) = default;
};

using Population = std::vector<Nest>;

struct SearchReport {
  SegmentationResult best;
  std::vector<double> trace;  // best-so-far fitness after each generation
  SearchParams params;
  std::uint64_t evaluations = 0;
  Population final_population;
};

/// Index of the fittest nest; ties go to the lower index.
std::size_t best_index(std::span<const Nest> population);

/// Number of nests abandoned per generation: ceil(pa * (n - 1)).
std::size_t abandon_count(std::size_t nests, double pa);

/// Lévy move of `current` relative to `best` with caller-supplied raw steps:
///   raw_k = current_k + alpha * steps[k] * (current_k - best_k)
/// When current == best the difference factor is replaced by 1 gray level.
/// The result goes through repair().
ThresholdSet propose_cuckoo(std::span<const double> steps, const ThresholdSet& current,
                            const ThresholdSet& best, double alpha);

/// Same move with one Lévy step per coordinate drawn from rng, in coordinate order.
ThresholdSet propose_cuckoo(Rng& rng, const ThresholdSet& current, const ThresholdSet& best,
                            const LevyParams& levy);
ThresholdSet propose_cuckoo(Rng& rng, const LevyStepSampler& sampler, const ThresholdSet& current,
                            const ThresholdSet& best, double alpha);

/// Replaces the ceil(pa * (n - 1)) lowest-fitness nests other than the best
/// with fresh random threshold sets scored against hist. Ranking is stable
/// (lower index first among equal fitness); replacements are drawn in that
/// ranked order. Returns the number of nests replaced.
std::size_t abandon_worst(Rng& rng, Population& population, double pa, const Histogram& hist);

/// Cuckoo search over threshold sets, maximizing fitness_from_histogram.
///
/// One generation: pick nest i uniformly, build a Lévy proposal from it,
/// compare against a uniformly chosen j != i and replace j on strict
/// improvement; then abandon the worst fraction. The best nest is never
/// abandoned, so the trace is non-decreasing.
///
/// Throws DegenerateImage for a constant histogram and InvalidParams for bad
/// parameters.
SearchReport search(const Histogram& hist, const SearchParams& params);

}  // namespace cuckooseg
