#pragma once

#include "bell/experiment.hpp"
#include "bell/quantum.hpp"

namespace bell {

enum class Arm { alice, bob };

// Expected singles count: N * eta_arm * p_arm(angle). Unrounded.
double expected_singles(const EntangledPairState& state,
                        const ExperimentParams& params, Arm arm, Angle angle);

// Expected coincidence count: N * eta_a * eta_b * p_AB(alpha, beta).
double expected_coincidences(const EntangledPairState& state,
                             const ExperimentParams& params, Angle alpha,
                             Angle beta);

// All six expected cells. Deterministic; cells stay unrounded reals, display
// rounding is the report renderer's job.
CountsTable predict_table(const EntangledPairState& state,
                          const ExperimentParams& params,
                          const SettingAngles& settings);

}  // namespace bell
