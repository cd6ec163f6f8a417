#pragma once

#include "cuckooseg/rng.hpp"

namespace cuckooseg {

/// Step distribution for Lévy-flight proposals.
///
/// beta is the stability index of Mantegna's construction; the power-law tail
/// of the step length then has exponent lambda = 1 + beta. alpha scales the
/// raw step into gray-level units.
struct LevyParams {
  double beta = 1.5;
  double alpha = 1.0;

  /// Throws InvalidBeta for beta outside (0, 2) and InvalidParams for
  /// non-positive alpha.
  void validate() const;
  double tail_exponent() const noexcept { return 1.0 + beta; }

  friend bool operator==(const LevyParams&, const LevyParams&) = default;
};

/// sigma_u = [Gamma(1+b) sin(pi b / 2) / (Gamma((1+b)/2) b 2^((b-1)/2))]^(1/b).
/// Throws InvalidBeta unless 0 < beta < 2.
double mantegna_sigma(double beta);

/// Draws Mantegna steps u / |v|^(1/beta), u ~ N(0, sigma_u^2), v ~ N(0, 1).
/// sigma_u is computed once at construction.
class LevyStepSampler {
 public:
  explicit LevyStepSampler(double beta);

  double beta() const noexcept { return beta_; }
  double sigma() const noexcept { return sigma_; }

  /// Consumes two normal draws (u first, then v). If |v|^(1/beta) underflows
  /// to zero, v is redrawn; after kMaxRedraws failed redraws the step is 0.
  double operator()(Rng& rng) const;

  static constexpr int kMaxRedraws = 64;

 private:
  double beta_;
  double inv_beta_;
  double sigma_;
};

/// Unscaled step (alpha is applied by the caller).
double levy_step(Rng& rng, const LevyParams& params);

}  // namespace cuckooseg
