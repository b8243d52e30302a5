#pragma once

#include "bell/angle.hpp"
#include "bell/errors.hpp"

namespace bell {

// Two-photon polarization state (|HV> + r|VH>) / sqrt(1 + r^2) with a single
// non-negative amplitude ratio r. r = 1 is the maximally entangled case.
class EntangledPairState {
 public:
  explicit EntangledPairState(double amplitude_ratio);

  double amplitude_ratio() const { return r_; }

  // 1 / (1 + r^2); the squared |HV> and |VH> amplitudes sum to 1.
  double normalization() const { return inv_hypot_ * inv_hypot_; }

  // 1 / sqrt(1 + r^2), precomputed in a form stable for any finite r.
  double inverse_norm_factor() const { return inv_hypot_; }

 private:
  double r_;
  double inv_hypot_;
};

// p_AB(alpha, beta) = (cos(a) sin(b) + r sin(a) cos(b))^2 / (1 + r^2):
// probability that both arms detect, at unit efficiency.
double coincidence_probability(const EntangledPairState& state, Angle alpha,
                               Angle beta);

// p_A(alpha) = (cos^2(a) + r^2 sin^2(a)) / (1 + r^2).
double singles_probability_alice(const EntangledPairState& state, Angle alpha);

// p_B(beta) = (sin^2(b) + r^2 cos^2(b)) / (1 + r^2).
double singles_probability_bob(const EntangledPairState& state, Angle beta);

// Per-pair outcome probabilities at one analyzer setting after thinning by
// the arm efficiencies: exactly one of the four outcomes happens per pair.
struct FourOutcomeDistribution {
  double p_both = 0.0;
  double p_a_only = 0.0;
  double p_b_only = 0.0;
  double p_neither = 0.0;

  double sum() const { return p_both + p_a_only + p_b_only + p_neither; }

  friend bool operator==(const FourOutcomeDistribution&,
                         const FourOutcomeDistribution&) = default;
};

// Negative components within this slack of zero are floating-point dust and
// get clamped; anything worse throws consistency_error (it would mean
// p_AB > min(p_A, p_B), which the closed forms cannot produce).
inline constexpr double kProbabilitySlack = 1e-12;

// Composition of the closed-form probabilities with independent per-arm
// Bernoulli detection at efficiencies eta_a, eta_b:
//   p_both    = eta_a eta_b p_AB
//   p_a_only  = eta_a p_A - p_both
//   p_b_only  = eta_b p_B - p_both
//   p_neither = 1 - (sum of the others)
// Throws validation_error unless 0 <= eta <= 1.
FourOutcomeDistribution joint_outcome_distribution(
    const EntangledPairState& state, double eta_a, double eta_b, Angle alpha,
    Angle beta);

}  // namespace bell
