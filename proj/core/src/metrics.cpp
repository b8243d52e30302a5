#include "bell/metrics.hpp"

#include <cmath>
#include <string>

#include "bell/errors.hpp"

namespace bell {

double j_value(const CountsTable& counts) {
  return counts.s_alpha1 + counts.s_beta1 + counts.c22 - counts.c11 -
         counts.c12 - counts.c21;
}

double poisson_sigma(const CountsTable& counts) {
  counts.validate();
  // Each cell contributes its own value to Var(J): the coefficients are all
  // +/-1 and independent Poisson counts have variance equal to their mean.
  return std::sqrt(counts.total());
}

JResult significance(const CountsTable& counts) {
  JResult r;
  r.j = j_value(counts);
  r.sigma = poisson_sigma(counts);
  r.n_sigma = r.sigma > 0.0 ? r.j / r.sigma : 0.0;
  return r;
}

std::size_t AnomalyReport::flag_count() const {
  std::size_t n = 0;
  for (const CellRatio& cell : cells) {
    if (cell.flagged) ++n;
  }
  return n;
}

AnomalyReport anomaly_report(const CountsTable& observed,
                             const CountsTable& predicted, RatioBand band) {
  observed.validate();
  predicted.validate();
  if (!std::isfinite(band.lo) || !std::isfinite(band.hi) || band.lo < 0.0 ||
      band.lo >= band.hi) {
    throw validation_error("anomaly_report: band must satisfy 0 <= lo < hi");
  }
  AnomalyReport report;
  report.band = band;
  const std::array<double, 6> obs = cells_in_order(observed);
  const std::array<double, 6> pred = cells_in_order(predicted);
  for (std::size_t i = 0; i < obs.size(); ++i) {
    CellRatio& cell = report.cells[i];
    cell.quantity = kCountsQuantities[i];
    cell.observed = obs[i];
    cell.predicted = pred[i];
    if (!(pred[i] > 0.0)) {
      throw validation_error(std::string("anomaly_report: predicted ") +
                             kCountsQuantities[i] +
                             " is zero; observed/predicted is undefined");
    }
    cell.ratio = obs[i] / pred[i];
    cell.flagged = cell.ratio < band.lo || cell.ratio > band.hi;
  }
  return report;
}

}  // namespace bell
