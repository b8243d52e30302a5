#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bell/experiment.hpp"
#include "bell/lhv.hpp"
#include "bell/quantum.hpp"
#include "bell/rng.hpp"

namespace bell {

// aggregate: one multinomial tally draw per setting (O(1) per setting).
// per_pair: every pair is sampled individually, in chunks.
// The LHV simulator always samples per pair — response probabilities change
// with every lambda, so there is no aggregate shortcut — and ignores `mode`.
enum class SampleMode { aggregate, per_pair };

// fixed: exactly N pairs per setting. poisson: M ~ Poisson(N) per setting.
enum class PairNumberModel { fixed, poisson };

struct SimulationConfig {
  SampleMode mode = SampleMode::aggregate;
  PairNumberModel pair_number_model = PairNumberModel::fixed;
  std::uint64_t seed = 0;
  std::int64_t chunk_size = 1 << 20;  // per-pair mode; part of stream identity

  // Per-setting pair-count override (canonical setting order); when absent
  // every setting uses params.n_pairs_per_setting.
  std::optional<std::array<double, 4>> n_pairs_override;

  void validate() const;  // throws validation_error (chunk_size >= 1, ...)
};

struct FourOutcomeTally {
  std::int64_t both = 0;
  std::int64_t a_only = 0;
  std::int64_t b_only = 0;
  std::int64_t neither = 0;

  std::int64_t total() const { return both + a_only + b_only + neither; }

  FourOutcomeTally& operator+=(const FourOutcomeTally& o) {
    both += o.both;
    a_only += o.a_only;
    b_only += o.b_only;
    neither += o.neither;
    return *this;
  }

  friend bool operator==(const FourOutcomeTally&,
                         const FourOutcomeTally&) = default;
};

struct SimulatedCounts {
  // Assembled from the tallies: coincidence cells are `both` of their
  // setting; both singles are read from the (alpha1, beta1) run
  // (s_alpha1 = both + a_only, s_beta1 = both + b_only).
  CountsTable counts;
  std::array<FourOutcomeTally, 4> tallies;  // canonical setting order
  std::array<std::int64_t, 4> pairs_drawn{};
  std::uint64_t seed = 0;  // echo of config.seed

  friend bool operator==(const SimulatedCounts&,
                         const SimulatedCounts&) = default;
};

// In-silico rerun under the quantum model: outcome probabilities come from
// joint_outcome_distribution at each setting. Identical (seed, config,
// inputs) produce bit-identical results for any threads >= 1.
SimulatedCounts simulate_quantum(const EntangledPairState& state,
                                 const ExperimentParams& params,
                                 const SettingAngles& settings,
                                 const SimulationConfig& config,
                                 int threads = 1);

// In-silico rerun under a local model: per pair, draw lambda, evaluate the
// two local response probabilities, draw two independent detections.
SimulatedCounts simulate_lhv(const LhvModel& model,
                             const ExperimentParams& params,
                             const SettingAngles& settings,
                             const SimulationConfig& config, int threads = 1);

struct SweepSummary {
  int n_seeds = 0;
  std::vector<std::uint64_t> seeds;  // derived, pairwise distinct
  CountsTable cell_mean;
  CountsTable cell_stddev;  // sample standard deviation over seeds
  std::vector<double> j_values;
  double j_mean = 0.0;
  double j_stddev = 0.0;
  double j_min = 0.0;
  double j_max = 0.0;
};

// Runs `run` once per seed derived from master_seed and aggregates per-cell
// and J statistics. Seeds are pairwise distinct by construction (verified).
// Requires n_seeds >= 2.
SweepSummary sweep_seeds(const std::function<SimulatedCounts(std::uint64_t)>& run,
                         std::uint64_t master_seed, int n_seeds);

}  // namespace bell
