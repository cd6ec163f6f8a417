#include "cuckooseg/rng.hpp"

#include <cmath>
#include <numbers>

namespace cuckooseg {

namespace {
constexpr double kTwoPowMinus53 = 0x1.0p-53;
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * kTwoPowMinus53; }

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  const std::uint64_t reject_below = (0 - n) % n;
  std::uint64_t w = next_u64();
  while (w < reject_below) w = next_u64();
  return w % n;
}

double Rng::normal() {
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * kTwoPowMinus53;
  const double u2 = static_cast<double>(next_u64() >> 11) * kTwoPowMinus53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace cuckooseg
