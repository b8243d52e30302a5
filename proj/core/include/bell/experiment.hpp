#pragma once

#include <array>
#include <optional>

#include "bell/angle.hpp"

namespace bell {

// Source strength and detection efficiencies of one experimental run.
struct ExperimentParams {
  double n_pairs_per_setting = 0.0;  // expected produced pairs per setting
  double eta_a = 1.0;                // Alice arm efficiency, in [0, 1]
  double eta_b = 1.0;                // Bob arm efficiency, in [0, 1]
  std::optional<double> duration_s;  // wall time per setting; metadata only

  void validate() const;  // throws validation_error
};

// The four analyzer angles defining the 2x2 setting grid.
struct SettingAngles {
  Angle alpha1, alpha2;  // Alice
  Angle beta1, beta2;    // Bob

  void validate() const;  // throws validation_error on non-finite angles

  friend constexpr bool operator==(const SettingAngles&,
                                   const SettingAngles&) = default;
};

// One (alpha_i, beta_j) pair from the grid.
struct SettingPair {
  Angle alpha, beta;
};

// Canonical setting order used wherever a setting index appears:
//   0:(a1,b1)  1:(a1,b2)  2:(a2,b1)  3:(a2,b2)
std::array<SettingPair, 4> setting_pairs(const SettingAngles& s);

// The six observables: two singles and the four coincidences. Cells are
// reals so the same table carries expected counts; observed tables hold
// integral values.
struct CountsTable {
  double s_alpha1 = 0.0;  // Alice singles at alpha1
  double s_beta1 = 0.0;   // Bob singles at beta1
  double c11 = 0.0;       // coincidences at (alpha1, beta1)
  double c12 = 0.0;       //                 (alpha1, beta2)
  double c21 = 0.0;       //                 (alpha2, beta1)
  double c22 = 0.0;       //                 (alpha2, beta2)

  double total() const { return s_alpha1 + s_beta1 + c11 + c12 + c21 + c22; }

  void validate() const;  // throws validation_error on negative/non-finite

  friend bool operator==(const CountsTable&, const CountsTable&) = default;
};

// Cell labels in canonical order; shared by the counts CSV schema and the
// report renderers.
inline constexpr std::array<const char*, 6> kCountsQuantities = {
    "S_A1", "S_B1", "C11", "C12", "C21", "C22"};

std::array<double, 6> cells_in_order(const CountsTable& t);

}  // namespace bell
