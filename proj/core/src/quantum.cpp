#include "bell/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bell {

EntangledPairState::EntangledPairState(double amplitude_ratio)
    : r_(amplitude_ratio) {
  if (!std::isfinite(amplitude_ratio) || amplitude_ratio < 0.0) {
    throw validation_error("amplitude ratio r must be finite and >= 0, got " +
                           std::to_string(amplitude_ratio));
  }
  // hypot keeps 1/sqrt(1+r^2) finite even when r^2 would overflow.
  inv_hypot_ = 1.0 / std::hypot(1.0, amplitude_ratio);
}

namespace {

// The direct textbook forms keep exact cases exact (e.g. p = 1/2 for r = 1
// with perpendicular analyzers). They are used whenever 1 + r^2 and the
// squared numerator are representable; only for astronomically large ratios
// does evaluation switch to the amplitude form pre-scaled by 1/sqrt(1+r^2).
constexpr double kDirectFormLimit = 1e150;

}  // namespace

double coincidence_probability(const EntangledPairState& state, Angle alpha,
                               Angle beta) {
  const double a = alpha.radians();
  const double b = beta.radians();
  const double r = state.amplitude_ratio();
  const double ca = std::cos(a);
  const double sa = std::sin(a);
  const double cb = std::cos(b);
  const double sb = std::sin(b);
  if (r <= kDirectFormLimit) {
    const double u = ca * sb + r * sa * cb;
    return std::min((u * u) / (1.0 + r * r), 1.0);
  }
  const double inv = state.inverse_norm_factor();
  const double amplitude = ca * sb * inv + (r * inv) * sa * cb;
  return std::min(amplitude * amplitude, 1.0);
}

double singles_probability_alice(const EntangledPairState& state,
                                 Angle alpha) {
  const double a = alpha.radians();
  const double r = state.amplitude_ratio();
  const double ca = std::cos(a);
  const double sa = std::sin(a);
  if (r <= kDirectFormLimit) {
    return std::min((ca * ca + (r * r) * (sa * sa)) / (1.0 + r * r), 1.0);
  }
  const double inv = state.inverse_norm_factor();
  const double t1 = ca * inv;
  const double t2 = (r * inv) * sa;
  return std::min(t1 * t1 + t2 * t2, 1.0);
}

double singles_probability_bob(const EntangledPairState& state, Angle beta) {
  const double b = beta.radians();
  const double r = state.amplitude_ratio();
  const double cb = std::cos(b);
  const double sb = std::sin(b);
  if (r <= kDirectFormLimit) {
    return std::min((sb * sb + (r * r) * (cb * cb)) / (1.0 + r * r), 1.0);
  }
  const double inv = state.inverse_norm_factor();
  const double t1 = sb * inv;
  const double t2 = (r * inv) * cb;
  return std::min(t1 * t1 + t2 * t2, 1.0);
}

namespace {

// Clamps floating-point dust; anything beyond the slack is a real violation.
double checked_component(double value, const char* label) {
  if (value >= 0.0 && value <= 1.0 + kProbabilitySlack) {
    return value > 1.0 ? 1.0 : value;
  }
  if (value < 0.0 && value >= -kProbabilitySlack) {
    return 0.0;
  }
  throw consistency_error(std::string("outcome probability ") + label + " = " +
                          std::to_string(value) + " outside [0, 1]");
}

}  // namespace

FourOutcomeDistribution joint_outcome_distribution(
    const EntangledPairState& state, double eta_a, double eta_b, Angle alpha,
    Angle beta) {
  if (!(eta_a >= 0.0 && eta_a <= 1.0) || !(eta_b >= 0.0 && eta_b <= 1.0)) {
    throw validation_error("arm efficiencies must lie in [0, 1]");
  }
  const double p_ab = coincidence_probability(state, alpha, beta);
  const double p_a = singles_probability_alice(state, alpha);
  const double p_b = singles_probability_bob(state, beta);

  FourOutcomeDistribution d;
  d.p_both = checked_component(eta_a * eta_b * p_ab, "p_both");
  d.p_a_only = checked_component(eta_a * p_a - d.p_both, "p_a_only");
  d.p_b_only = checked_component(eta_b * p_b - d.p_both, "p_b_only");
  d.p_neither =
      checked_component(1.0 - d.p_both - d.p_a_only - d.p_b_only, "p_neither");
  return d;
}

}  // namespace bell
