#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "bell/experiment.hpp"

namespace bell {

// Sign convention used throughout: under this arrangement every local
// hidden variable model gives J >= 0, and the published experimental row
// evaluates to a negative J. Printed in every analysis report.
inline constexpr std::string_view kJConvention =
    "J = S_A1 + S_B1 + C22 - C11 - C12 - C21  (local models imply J >= 0)";

// The J statistic under kJConvention.
double j_value(const CountsTable& counts);

// sqrt of the summed cells: the standard deviation of a +/-1-coefficient
// linear combination of independent Poisson counts. Deliberately ignores the
// correlation between coincidences and singles; the reports say so.
double poisson_sigma(const CountsTable& counts);

inline constexpr std::string_view kSigmaEstimator =
    "independent-Poisson estimate: sigma = sqrt(sum of the six cells)";

struct JResult {
  double j = 0.0;
  double sigma = 0.0;
  double n_sigma = 0.0;  // j / sigma, or 0 when sigma == 0
  std::string_view convention = kJConvention;
};

// Bundles j_value, poisson_sigma and their ratio.
JResult significance(const CountsTable& counts);

// Cells whose observed/predicted ratio falls outside [lo, hi] get flagged.
struct RatioBand {
  double lo = 0.9;
  double hi = 1.1;
};

struct CellRatio {
  std::string_view quantity;
  double observed = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  bool flagged = false;
};

struct AnomalyReport {
  std::array<CellRatio, 6> cells;  // canonical cell order
  RatioBand band;

  std::size_t flag_count() const;
};

// Per-cell observed/predicted ratios. Throws validation_error when any
// predicted cell is zero (degenerate prediction).
AnomalyReport anomaly_report(const CountsTable& observed,
                             const CountsTable& predicted,
                             RatioBand band = {});

}  // namespace bell
