#include "bell/experiment.hpp"

#include <cmath>
#include <string>

#include "bell/errors.hpp"

namespace bell {

void ExperimentParams::validate() const {
  if (!std::isfinite(n_pairs_per_setting) || n_pairs_per_setting < 0.0) {
    throw validation_error("n_pairs must be finite and >= 0, got " +
                           std::to_string(n_pairs_per_setting));
  }
  if (!(eta_a >= 0.0 && eta_a <= 1.0)) {
    throw validation_error("eta_a = " + std::to_string(eta_a) +
                           " out of range [0, 1]");
  }
  if (!(eta_b >= 0.0 && eta_b <= 1.0)) {
    throw validation_error("eta_b = " + std::to_string(eta_b) +
                           " out of range [0, 1]");
  }
  if (duration_s && !(*duration_s > 0.0 && std::isfinite(*duration_s))) {
    throw validation_error("duration_s must be finite and > 0, got " +
                           std::to_string(*duration_s));
  }
}

void SettingAngles::validate() const {
  for (const Angle a : {alpha1, alpha2, beta1, beta2}) {
    if (!std::isfinite(a.degrees)) {
      throw validation_error("analyzer angles must be finite");
    }
  }
}

std::array<SettingPair, 4> setting_pairs(const SettingAngles& s) {
  return {SettingPair{s.alpha1, s.beta1}, SettingPair{s.alpha1, s.beta2},
          SettingPair{s.alpha2, s.beta1}, SettingPair{s.alpha2, s.beta2}};
}

void CountsTable::validate() const {
  const auto cells = cells_in_order(*this);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!std::isfinite(cells[i]) || cells[i] < 0.0) {
      throw validation_error(std::string(kCountsQuantities[i]) +
                             " must be finite and >= 0, got " +
                             std::to_string(cells[i]));
    }
  }
}

std::array<double, 6> cells_in_order(const CountsTable& t) {
  return {t.s_alpha1, t.s_beta1, t.c11, t.c12, t.c21, t.c22};
}

}  // namespace bell
