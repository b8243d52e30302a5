#pragma once

#include <array>

#include "bell/experiment.hpp"
#include "bell/quantum.hpp"

namespace bell_tests {

// The reference run shipped in data/experiment.cfg.
inline bell::EntangledPairState reference_state() {
  return bell::EntangledPairState(0.297);
}

inline bell::SettingAngles reference_angles() {
  return {bell::Angle{85.6}, bell::Angle{118.0}, bell::Angle{-5.4},
          bell::Angle{25.9}};
}

inline bell::ExperimentParams reference_params() {
  return {24.2e6, 0.7377, 0.7859, 300.0};
}

// The observed counts shipped in data/observed_counts.csv.
inline bell::CountsTable observed_row() {
  return {1523000.0, 1694000.0, 1069000.0, 1153000.0, 1191000.0, 69790.0};
}

// The quantum prediction for the reference run, rounded to the 4-significant-
// digit thousands display convention and scaled back to raw counts.
inline bell::CountsTable predicted_row_display() {
  return {1535000.0, 1683000.0, 1066000.0, 1160000.0, 1201000.0, 12250.0};
}

// High-precision expected counts for the reference run, frozen from an
// independent multi-precision evaluation of the closed forms.
inline constexpr std::array<double, 6> kPredictedCells = {
    1535131.51008, 1682771.6988172, 1066349.0089367,
    1159526.369641, 1201349.6956665, 12254.470859685};

// Coincidence probabilities at the four settings of the reference run, same
// provenance.
inline constexpr double kP11 = 0.07600408438;
inline constexpr double kP12 = 0.0826453058994;
inline constexpr double kP21 = 0.0856262657668;
inline constexpr double kP22 = 0.000873438085886;

// Singles probabilities at the reference angles.
inline constexpr double kPAlice1 = 0.0859904925674;
inline constexpr double kPBob1 = 0.0884794765394;

// Expected counts for the Malus-law local model at the reference run scale,
// frozen from the closed form E[cos^2(t-a) sin^2(t-b)] = (2 - cos 2(a-b))/8
// and cross-checked by numerical quadrature over the polarization angle.
inline constexpr std::array<double, 6> kMalusCells = {
    8926170.0,      9509390.0,      5260239.4034077,
    4368470.409668, 4198421.7091223, 5256597.9649841};
inline constexpr double kMalusJ = 9865026.442786;

// J statistics of the bundled tables (independent arithmetic).
inline constexpr double kObservedJ = -126210.0;
inline constexpr double kObservedSigma = 2588.39525575;
inline constexpr double kObservedNSigma = -48.7599410173;
inline constexpr double kPredictedJ = -197067.3944873;  // unrounded cells
inline constexpr double kPredictedSigma = 2580.19044917;
inline constexpr double kDisplayRowJ = -196750.0;  // rounded display cells

}  // namespace bell_tests
