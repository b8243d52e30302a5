#include "bell/report.hpp"

#include <cstdio>
#include <string_view>

#include "bell/counts_io.hpp"

namespace bell {

namespace {

std::string fmt_stat(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_count(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_u64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(v));
  return buf;
}

std::string fmt_i64(std::int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  return buf;
}

void append_line(std::string& out, std::string_view s) {
  out += s;
  out += '\n';
}

void append_header(std::string& out, std::string_view title) {
  append_line(out, title);
  out.append(title.size(), '=');
  out += '\n';
}

void append_config_echo(std::string& out, const ExperimentConfig& config) {
  append_line(out, "configuration:");
  const std::string text = to_text(config);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    out += "  ";
    out += text.substr(pos, eol - pos);
    out += '\n';
    pos = eol + 1;
  }
}

void append_counts_table(std::string& out, std::string_view value_label,
                         const CountsTable& counts) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-8s %18s %10s\n", "quantity",
                std::string(value_label).c_str(), "/1000");
  out += buf;
  const std::array<double, 6> cells = cells_in_order(counts);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%-8s %18s %10s\n", kCountsQuantities[i],
                  fmt_count(cells[i]).c_str(),
                  format_thousands(cells[i]).c_str());
    out += buf;
  }
}

void append_rates(std::string& out, const CountsTable& counts,
                  double duration_s) {
  out += "rates per second (duration " + fmt_stat(duration_s) + " s):\n";
  const std::array<double, 6> cells = cells_in_order(counts);
  char buf[96];
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%-8s %18s\n", kCountsQuantities[i],
                  fmt_stat(cells[i] / duration_s).c_str());
    out += buf;
  }
}

void append_j_header(std::string& out) {
  append_line(out, "J statistic:");
  out += "  convention: ";
  append_line(out, kJConvention);
  out += "  sigma:      ";
  append_line(out, kSigmaEstimator);
}

void append_j_row(std::string& out, std::string_view label, const JResult& j) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-10s J = %-14s sigma = %-12s J/sigma = %s\n",
                std::string(label).c_str(), fmt_stat(j.j).c_str(),
                fmt_stat(j.sigma).c_str(), fmt_stat(j.n_sigma).c_str());
  out += buf;
}

}  // namespace

std::string format_thousands(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", value / 1000.0);
  return buf;
}

std::string render_prediction_report(const ExperimentConfig& config,
                                     const CountsTable& predicted) {
  std::string out;
  append_header(out, "prediction (quantum model)");
  append_config_echo(out, config);
  out += '\n';
  append_counts_table(out, "expected", predicted);
  if (config.params.duration_s) {
    out += '\n';
    append_rates(out, predicted, *config.params.duration_s);
  }
  out += '\n';
  append_j_header(out);
  append_j_row(out, "predicted", significance(predicted));
  return out;
}

std::string render_analysis_report(const ExperimentConfig& config,
                                   const CountsTable& observed,
                                   const CountsTable& predicted,
                                   const JResult& observed_j,
                                   const JResult& predicted_j,
                                   const AnomalyReport& anomalies) {
  std::string out;
  append_header(out, "analysis (observed vs quantum prediction)");
  append_config_echo(out, config);
  out += '\n';

  char buf[192];
  std::snprintf(buf, sizeof buf, "%-8s %16s %16s %12s  %s\n", "quantity",
                "observed", "predicted", "obs/pred", "flag");
  out += buf;
  for (const CellRatio& cell : anomalies.cells) {
    std::snprintf(buf, sizeof buf, "%-8s %16s %16s %12s  %s\n",
                  std::string(cell.quantity).c_str(),
                  fmt_count(cell.observed).c_str(),
                  fmt_count(cell.predicted).c_str(),
                  fmt_stat(cell.ratio).c_str(), cell.flagged ? "*" : "");
    out += buf;
  }
  out += '\n';
  std::snprintf(buf, sizeof buf, "cells outside ratio band [%s, %s]: %zu of 6\n",
                fmt_stat(anomalies.band.lo).c_str(),
                fmt_stat(anomalies.band.hi).c_str(), anomalies.flag_count());
  out += buf;
  for (const CellRatio& cell : anomalies.cells) {
    if (!cell.flagged) continue;
    std::snprintf(buf, sizeof buf, "  %s: observed/predicted = %s\n",
                  std::string(cell.quantity).c_str(),
                  fmt_stat(cell.ratio).c_str());
    out += buf;
  }
  out += '\n';
  append_j_header(out);
  append_j_row(out, "observed", observed_j);
  append_j_row(out, "predicted", predicted_j);
  return out;
}

std::string render_simulation_report(const ExperimentConfig& config,
                                     std::string_view model_name,
                                     const SimulationConfig& sim_config,
                                     const SimulatedCounts& result) {
  std::string out;
  append_header(out, "simulation (" + std::string(model_name) + ")");
  append_config_echo(out, config);
  append_line(out, "run parameters:");
  const bool quantum = model_name == "quantum";
  const char* mode = !quantum ? "per-pair (local models always sample per pair)"
                    : sim_config.mode == SampleMode::aggregate ? "aggregate"
                                                               : "per-pair";
  out += "  mode       = ";
  append_line(out, mode);
  out += "  pair model = ";
  append_line(out, sim_config.pair_number_model == PairNumberModel::fixed
                       ? "fixed"
                       : "poisson");
  out += "  seed       = ";
  append_line(out, fmt_u64(sim_config.seed));
  out += "  chunk size = ";
  append_line(out, fmt_i64(sim_config.chunk_size));
  out += '\n';

  static constexpr std::array<const char*, 4> kSettingLabels = {
      "(alpha1, beta1)", "(alpha1, beta2)", "(alpha2, beta1)",
      "(alpha2, beta2)"};
  char buf[192];
  std::snprintf(buf, sizeof buf, "%-16s %12s %12s %12s %12s %12s\n", "setting",
                "pairs", "both", "a_only", "b_only", "neither");
  out += buf;
  for (std::size_t s = 0; s < kSettingLabels.size(); ++s) {
    const FourOutcomeTally& t = result.tallies[s];
    std::snprintf(buf, sizeof buf, "%-16s %12s %12s %12s %12s %12s\n",
                  kSettingLabels[s], fmt_i64(result.pairs_drawn[s]).c_str(),
                  fmt_i64(t.both).c_str(), fmt_i64(t.a_only).c_str(),
                  fmt_i64(t.b_only).c_str(), fmt_i64(t.neither).c_str());
    out += buf;
  }
  out += '\n';
  append_counts_table(out, "count", result.counts);
  if (config.params.duration_s) {
    out += '\n';
    append_rates(out, result.counts, *config.params.duration_s);
  }
  out += '\n';
  append_j_header(out);
  append_j_row(out, "simulated", significance(result.counts));
  return out;
}

std::string render_lhv_check_report(std::string_view model_name,
                                    const VertexEnumeration& vertices,
                                    const NonnegativityReport& nonneg,
                                    std::uint64_t seed) {
  std::string out;
  append_header(out, "local-model check (" + std::string(model_name) + ")");

  append_line(out, "deterministic strategies (all 16 vertices):");
  append_line(out, "  a1 a2 b1 b2 | J");
  char buf[96];
  for (const VertexEnumeration::Entry& e : vertices.entries) {
    std::snprintf(buf, sizeof buf, "   %d  %d  %d  %d | %d\n",
                  e.strategy.a1 ? 1 : 0, e.strategy.a2 ? 1 : 0,
                  e.strategy.b1 ? 1 : 0, e.strategy.b2 ? 1 : 0, e.j);
    out += buf;
  }
  std::snprintf(buf, sizeof buf,
                "  min J = %d, max J = %d, strategies with J == 0: %d\n",
                vertices.min_j, vertices.max_j, vertices.zero_count);
  out += buf;
  append_line(out, vertices.min_j >= 0
                       ? "  every deterministic strategy satisfies J >= 0"
                       : "  VERTEX BOUND VIOLATED");
  out += '\n';

  append_line(out, "Monte Carlo bound check:");
  out += "  model      = ";
  append_line(out, nonneg.model_name);
  out += "  n_lambda   = ";
  append_line(out, fmt_i64(nonneg.n_lambda));
  out += "  seed       = ";
  append_line(out, fmt_u64(seed));
  out += "  E[J] x N   = ";
  append_line(out, fmt_stat(nonneg.j_mean));
  out += "  std error  = ";
  append_line(out, fmt_stat(nonneg.j_std_error));
  out += "  verdict    = ";
  append_line(out, nonneg.passed ? "PASS (J bounded below by 0 within noise)"
                                 : "FAIL (mean J below -5 standard errors)");
  return out;
}

}  // namespace bell
