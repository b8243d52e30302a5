#pragma once

#include <cstdint>
#include <string>

#include "bell/config.hpp"
#include "bell/lhv.hpp"
#include "bell/metrics.hpp"
#include "bell/simulate.hpp"

namespace bell {

// Human-readable report renderers. Output is deterministic: identical inputs
// produce byte-identical text (no timestamps, no locale dependence). Tables
// show raw counts next to the published thousands convention (cells / 1000,
// 4 significant digits) so side-by-side comparison with printed tables is
// direct; when a duration is configured, singles/coincidence rates per
// second are shown as well.

std::string render_prediction_report(const ExperimentConfig& config,
                                     const CountsTable& predicted);

std::string render_analysis_report(const ExperimentConfig& config,
                                   const CountsTable& observed,
                                   const CountsTable& predicted,
                                   const JResult& observed_j,
                                   const JResult& predicted_j,
                                   const AnomalyReport& anomalies);

std::string render_simulation_report(const ExperimentConfig& config,
                                     std::string_view model_name,
                                     const SimulationConfig& sim_config,
                                     const SimulatedCounts& result);

std::string render_lhv_check_report(std::string_view model_name,
                                    const VertexEnumeration& vertices,
                                    const NonnegativityReport& nonneg,
                                    std::uint64_t seed);

// Published display convention: value / 1000 at 4 significant digits.
std::string format_thousands(double value);

}  // namespace bell
