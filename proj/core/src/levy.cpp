#include "cuckooseg/levy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 2.0)) {
    throw Error(ErrorCode::InvalidBeta, "beta must lie in (0, 2), got " + std::to_string(beta));
  }
}

}  // namespace

void LevyParams::validate() const {
  check_beta(beta);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidParams, "alpha must be positive, got " + std::to_string(alpha));
  }
}

double mantegna_sigma(double beta) {
  check_beta(beta);
  const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

LevyStepSampler::LevyStepSampler(double beta)
    : beta_(beta), inv_beta_(1.0 / beta), sigma_(mantegna_sigma(beta)) {}

double LevyStepSampler::operator()(Rng& rng) const {
  const double u = sigma_ * rng.normal();
  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    const double scale = std::pow(std::abs(rng.normal()), inv_beta_);
    if (scale > 0.0) return u / scale;
  }
  return 0.0;
}

double levy_step(Rng& rng, const LevyParams& params) {
  return LevyStepSampler(params.beta)(rng);
}

}  // namespace cuckooseg
