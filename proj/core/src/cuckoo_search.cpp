#include "cuckooseg/cuckoo_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

void SearchParams::validate() const {
  if (nests < 2) {
    throw Error(ErrorCode::InvalidParams, "at least 2 nests are required, got " + std::to_string(nests));
  }
  if (generations < 1) throw Error(ErrorCode::InvalidParams, "generations must be positive");
  if (!(pa >= 0.0 && pa <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "pa must lie in [0, 1], got " + std::to_string(pa));
  }
  if (levels < 1 || levels > static_cast<std::size_t>(kMaxLevels)) {
    throw Error(ErrorCode::InvalidParams,
                "levels must lie in [1, 255], got " + std::to_string(levels));
  }
  levy.validate();
}

std::size_t best_index(std::span<const Nest> population) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < population.size(); ++k) {
    if (population[k].fitness > population[best].fitness) best = k;
  }
  return best;
}

std::size_t abandon_count(std::size_t nests, double pa) {
  if (nests < 2) return 0;
  // The slack absorbs products like 0.3 * 10 = 3.0000000000000004.
  const double raw = pa * static_cast<double>(nests - 1);
  const auto count = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::min(count, nests - 1);
}

ThresholdSet propose_cuckoo(std::span<const double> steps, const ThresholdSet& current,
                            const ThresholdSet& best, double alpha) {
  if (current.levels() != best.levels() || steps.size() != current.levels()) {
    throw Error(ErrorCode::InvalidArgs, "proposal operands differ in length");
  }
  const bool self_move = current == best;
  std::vector<double> raw(current.levels());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const double diff = self_move ? 1.0 : static_cast<double>(current[k] - best[k]);
    raw[k] = current[k] + alpha * steps[k] * diff;
  }
  return repair(raw);
}

ThresholdSet propose_cuckoo(Rng& rng, const LevyStepSampler& sampler, const ThresholdSet& current,
                            const ThresholdSet& best, double alpha) {
  std::vector<double> steps(current.levels());
  for (double& s : steps) s = sampler(rng);
  return propose_cuckoo(steps, current, best, alpha);
}

ThresholdSet propose_cuckoo(Rng& rng, const ThresholdSet& current, const ThresholdSet& best,
                            const LevyParams& levy) {
  return propose_cuckoo(rng, LevyStepSampler(levy.beta), current, best, levy.alpha);
}

std::size_t abandon_worst(Rng& rng, Population& population, double pa, const Histogram& hist) {
  if (population.size() < 2) return 0;
  const std::size_t keep = best_index(population);

  std::vector<std::size_t> order;
  order.reserve(population.size() - 1);
  for (std::size_t k = 0; k < population.size(); ++k) {
    if (k != keep) order.push_back(k);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return population[a].fitness < population[b].fitness;
  });

  const std::size_t count = abandon_count(population.size(), pa);
  const std::size_t levels = population[keep].thresholds.levels();
  // Draw every replacement first so the RNG order does not depend on evaluation.
  std::vector<ThresholdSet> fresh;
  fresh.reserve(count);
  for (std::size_t r = 0; r < count; ++r) fresh.push_back(random_threshold_set(rng, levels));
  for (std::size_t r = 0; r < count; ++r) {
    Nest& nest = population[order[r]];
    nest.fitness = fitness_from_histogram(hist, fresh[r]);
    nest.thresholds = std::move(fresh[r]);
  }
  return count;
}

SearchReport search(const Histogram& hist, const SearchParams& params) {
  params.validate();
  if (hist.total < 2 || hist.is_constant()) {
    throw Error(ErrorCode::DegenerateImage,
                "input image is constant (zero gray-level variance); nothing to segment");
  }

  Rng rng(params.seed);
  const LevyStepSampler sampler(params.levy.beta);
  Population population;
  population.reserve(params.nests);
  for (std::size_t k = 0; k < params.nests; ++k) {
    ThresholdSet t = random_threshold_set(rng, params.levels);
    const double f = fitness_from_histogram(hist, t);
    population.push_back(Nest{std::move(t), f});
  }
  std::uint64_t evaluations = params.nests;
  std::vector<double> trace;
  trace.reserve(params.generations);

  const std::uint64_t n = params.nests;
  for (std::size_t gen = 0; gen < params.generations; ++gen) {
    const std::size_t best = best_index(population);
    const auto i = static_cast<std::size_t>(rng.uniform_below(n));
    ThresholdSet cuckoo = propose_cuckoo(rng, sampler, population[i].thresholds,
                                         population[best].thresholds, params.levy.alpha);
    const double f_cuckoo = fitness_from_histogram(hist, cuckoo);
    ++evaluations;

    auto j = static_cast<std::size_t>(rng.uniform_below(n - 1));
    if (j >= i) ++j;
    if (f_cuckoo > population[j].fitness) population[j] = Nest{std::move(cuckoo), f_cuckoo};

    evaluations += abandon_worst(rng, population, params.pa, hist);
    trace.push_back(population[best_index(population)].fitness);
  }

  SegmentationResult best = segment(hist, population[best_index(population)].thresholds);
  return SearchReport{std::move(best), std::move(trace), params, evaluations,
                      std::move(population)};
}

}  // namespace cuckooseg
