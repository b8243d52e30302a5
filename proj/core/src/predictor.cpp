#include "bell/predictor.hpp"

namespace bell {

double expected_singles(const EntangledPairState& state,
                        const ExperimentParams& params, Arm arm, Angle angle) {
  params.validate();
  if (arm == Arm::alice) {
    return params.n_pairs_per_setting * params.eta_a *
           singles_probability_alice(state, angle);
  }
  return params.n_pairs_per_setting * params.eta_b *
         singles_probability_bob(state, angle);
}

double expected_coincidences(const EntangledPairState& state,
                             const ExperimentParams& params, Angle alpha,
                             Angle beta) {
  params.validate();
  return params.n_pairs_per_setting * params.eta_a * params.eta_b *
         coincidence_probability(state, alpha, beta);
}

CountsTable predict_table(const EntangledPairState& state,
                          const ExperimentParams& params,
                          const SettingAngles& settings) {
  settings.validate();
  CountsTable t;
  t.s_alpha1 = expected_singles(state, params, Arm::alice, settings.alpha1);
  t.s_beta1 = expected_singles(state, params, Arm::bob, settings.beta1);
  t.c11 = expected_coincidences(state, params, settings.alpha1, settings.beta1);
  t.c12 = expected_coincidences(state, params, settings.alpha1, settings.beta2);
  t.c21 = expected_coincidences(state, params, settings.alpha2, settings.beta1);
  t.c22 = expected_coincidences(state, params, settings.alpha2, settings.beta2);
  return t;
}

}  // namespace bell
