#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cuckooseg/cuckoo_search.hpp"
#include "cuckooseg/exhaustive.hpp"
#include "cuckooseg/gray_image.hpp"
#include "cuckooseg/quality.hpp"
#include "cuckooseg/thresholding.hpp"

namespace {

using namespace cuckooseg;

GrayImage noise_image(std::size_t side, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> v(0, 255);
  std::vector<std::uint8_t> px(side * side);
  for (auto& p : px) p = static_cast<std::uint8_t>(v(gen));
  return GrayImage(side, side, std::move(px));
}

void BM_Histogram(benchmark::State& state) {
  const auto img = noise_image(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(histogram(img));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_Histogram)->Arg(256)->Arg(1024);

void BM_FitnessFromHistogram(benchmark::State& state) {
  const auto h = histogram(noise_image(256, 2));
  Rng rng(3);
  const auto t = random_threshold_set(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fitness_from_histogram(h, t));
}
BENCHMARK(BM_FitnessFromHistogram)->Arg(1)->Arg(4)->Arg(8)->Arg(50);

// Pixel-domain route for comparison: segment, then correlate every pixel.
void BM_FitnessPixelDomain(benchmark::State& state) {
  const auto img = noise_image(static_cast<std::size_t>(state.range(0)), 4);
  const auto h = histogram(img);
  const auto map = class_representatives(h, ThresholdSet({64, 128, 192}));
  for (auto _ : state) benchmark::DoNotOptimize(correlation(img, apply(img, map)));
}
BENCHMARK(BM_FitnessPixelDomain)->Arg(256)->Arg(1024);

void BM_SearchDefaults(benchmark::State& state) {
  const auto h = histogram(noise_image(1024, 5));
  SearchParams p;
  p.levels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search(h, p));
}
BENCHMARK(BM_SearchDefaults)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveTwoThresholds(benchmark::State& state) {
  const auto h = histogram(noise_image(256, 6));
  const OracleOptions opts{.threads = static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_best(h, 2, opts));
}
BENCHMARK(BM_ExhaustiveTwoThresholds)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
