#pragma once

#include <cstdint>
#include <random>

namespace cuckooseg {

/// Seeded, portable random source.
///
/// The engine is std::mt19937_64 seeded through its single-integer
/// constructor, whose output sequence is fixed by the C++ standard (the
/// 10000th draw of a default-seeded engine is 9981545732273789042). Every
/// derived draw below is defined in terms of raw 64-bit words so another
/// implementation can reproduce a run bit-for-bit:
///
///   uniform01()     (w >> 11) * 2^-53                         [0, 1), one word
///   uniform_below() rejection: redraw while w < (2^64 - n) mod n,
///                   then w mod n                              one or more words
///   normal()        Box-Muller cosine branch,
///                   u1 = ((w1 >> 11) + 1) * 2^-53 in (0, 1],
///                   u2 = (w2 >> 11) * 2^-53,
///                   sqrt(-2 ln u1) * cos(2 pi u2)             exactly two words
///
/// Independent streams for parallel runs use seed = base_seed XOR stream_index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static Rng for_stream(std::uint64_t base_seed, std::uint64_t stream_index) {
    return Rng(base_seed ^ stream_index);
  }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();
  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t uniform_below(std::uint64_t n);
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace cuckooseg
