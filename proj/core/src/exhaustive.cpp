#include "cuckooseg/exhaustive.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

BigCount combination_count(unsigned values, unsigned x) {
  if (values < 1 || x < 1 || x > values) {
    throw Error(ErrorCode::InvalidArgs,
                "C(" + std::to_string(values) + ", " + std::to_string(x) + ") is not defined here");
  }
  const unsigned k = std::min(x, values - x);
  BigCount result = 1;
  // Exact at every step: the running product of i consecutive integers is
  // divisible by i!.
  for (unsigned i = 1; i <= k; ++i) {
    result *= values - k + i;
    result /= i;
  }
  return result;
}

namespace {

struct Candidate {
  double fitness = 0.0;
  std::vector<int> thresholds;

  bool beats(const Candidate& other) const {
    if (fitness != other.fitness) return fitness > other.fitness;
    return thresholds < other.thresholds;
  }
};

struct Partial {
  std::optional<Candidate> best;
  std::uint64_t enumerated = 0;

  void offer(const Histogram& hist, std::vector<int> thresholds) {
    const double f = fitness_from_histogram(hist, ThresholdSet(thresholds));
    ++enumerated;
    Candidate c{f, std::move(thresholds)};
    if (!best || c.beats(*best)) best = std::move(c);
  }

  void merge(Partial&& other) {
    enumerated += other.enumerated;
    if (other.best && (!best || other.best->beats(*best))) best = std::move(other.best);
  }
};

/// Visits every k-subset of [0, n) whose smallest element is `first`, in
/// lexicographic order.
template <typename Fn>
void for_each_combination_from(int n, int k, int first, Fn&& fn) {
  if (k <= 0 || first + k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = first + i;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 1 && idx[pos] == n - k + pos) --pos;
    if (pos < 1) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

/// Runs bucket(b) for b in [0, buckets) across `threads` workers (bucket b on
/// worker b % threads) and merges the partial results.
template <typename Bucket>
Partial run_buckets(int buckets, unsigned threads, Bucket&& bucket) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(buckets, 1))));
  std::vector<Partial> partials(threads);
  auto worker = [&](unsigned w) {
    for (int b = static_cast<int>(w); b < buckets; b += static_cast<int>(threads)) {
      bucket(b, partials[w]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  Partial total;
  for (Partial& p : partials) total.merge(std::move(p));
  return total;
}

Partial enumerate_unrestricted(const Histogram& hist, int x, unsigned threads) {
  const int n = kMaxLevels;
  return run_buckets(n - x + 1, threads, [&](int first, Partial& out) {
    for_each_combination_from(n, x, first, [&](const std::vector<int>& idx) {
      std::vector<int> t(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) t[i] = idx[i] + kMinThreshold;
      out.offer(hist, std::move(t));
    });
  });
}

/// Lowest threshold tuple realizing a given set of cuts, or nullopt when the
/// cuts leave too few harmless positions for the remaining thresholds.
std::optional<std::vector<int>> canonical_tuple(const std::vector<int>& present,
                                                const std::vector<int>& cut_indices, int x) {
  // Gap m (1-based) lies between present[m-1] and present[m]; its lowest
  // realizing threshold is present[m-1] + 1.
  std::vector<bool> blocked(kGrayLevels, false);
  const std::size_t gaps = present.size() - 1;
  std::vector<bool> is_cut(gaps + 1, false);
  for (const int m : cut_indices) is_cut[static_cast<std::size_t>(m)] = true;
  for (std::size_t m = 1; m <= gaps; ++m) {
    if (is_cut[m]) {
      blocked[present[m - 1] + 1] = true;  // taken by the cut itself
      continue;
    }
    for (int t = present[m - 1] + 1; t <= present[m]; ++t) blocked[t] = true;
  }

  std::vector<int> tuple;
  tuple.reserve(static_cast<std::size_t>(x));
  for (const int m : cut_indices) tuple.push_back(present[m - 1] + 1);
  int fillers = x - static_cast<int>(cut_indices.size());
  for (int t = kMinThreshold; t <= kMaxThreshold && fillers > 0; ++t) {
    if (!blocked[t]) {
      tuple.push_back(t);
      --fillers;
    }
  }
  if (fillers > 0) return std::nullopt;
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

Partial enumerate_restricted(const Histogram& hist, int x, unsigned threads) {
  const std::vector<int> present = hist.present_values();
  const int gaps = static_cast<int>(present.size()) - 1;
  const int max_cuts = std::min(x, gaps);
  return run_buckets(gaps, threads, [&](int first, Partial& out) {
    for (int cuts = 1; cuts <= max_cuts; ++cuts) {
      for_each_combination_from(gaps, cuts, first, [&](const std::vector<int>& idx) {
        std::vector<int> cut_indices(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) cut_indices[i] = idx[i] + 1;
        if (auto tuple = canonical_tuple(present, cut_indices, x)) out.offer(hist, std::move(*tuple));
      });
    }
  });
}

}  // namespace

OracleResult exhaustive_best(const Histogram& hist, std::size_t x, const OracleOptions& options) {
  if (x < 1 || x > static_cast<std::size_t>(kMaxLevels)) {
    throw Error(ErrorCode::InvalidArgs, "levels must lie in [1, 255], got " + std::to_string(x));
  }
  const auto levels = static_cast<unsigned>(x);
  const BigCount space = combination_count(kMaxLevels, levels);
  if (space > options.max_combinations) {
    throw Error(ErrorCode::TooLarge,
                "search space C(256," + std::to_string(x) + ")=" +
                    combination_count(kGrayLevels, levels).str() + " (C(255," +
                    std::to_string(x) + ")=" + space.str() +
                    " with thresholds in [1,255]) exceeds the limit of " +
                    std::to_string(options.max_combinations) + " combinations");
  }
  if (hist.total < 2 || hist.is_constant()) {
    throw Error(ErrorCode::DegenerateImage,
                "input image is constant (zero gray-level variance); nothing to segment");
  }

  const int xi = static_cast<int>(x);
  Partial result = options.mode == Enumeration::Unrestricted
                       ? enumerate_unrestricted(hist, xi, options.threads)
                       : enumerate_restricted(hist, xi, options.threads);
  if (!result.best) {
    throw Error(ErrorCode::InvalidArgs, "no threshold set of size " + std::to_string(x) + " exists");
  }
  return OracleResult{segment(hist, ThresholdSet(std::move(result.best->thresholds))),
                      result.enumerated};
}

}  // namespace cuckooseg
