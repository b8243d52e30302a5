#include <benchmark/benchmark.h>

#include "bell/lhv.hpp"
#include "bell/predictor.hpp"
#include "bell/quantum.hpp"
#include "bell/simulate.hpp"

namespace {

using namespace bell;

const EntangledPairState kState{0.297};
const SettingAngles kSettings{Angle{85.6}, Angle{118.0}, Angle{-5.4},
                              Angle{25.9}};
const ExperimentParams kParams{24.2e6, 0.7377, 0.7859, 300.0};

void BM_coincidence_probability(benchmark::State& state) {
  double acc = 0.0;
  for (auto _ : state) {
    acc += coincidence_probability(kState, kSettings.alpha1, kSettings.beta2);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_coincidence_probability);

void BM_joint_outcome_distribution(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(joint_outcome_distribution(
        kState, kParams.eta_a, kParams.eta_b, kSettings.alpha2,
        kSettings.beta2));
  }
}
BENCHMARK(BM_joint_outcome_distribution);

void BM_predict_table(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(predict_table(kState, kParams, kSettings));
  }
}
BENCHMARK(BM_predict_table);

void BM_simulate_aggregate_full_scale(benchmark::State& state) {
  SimulationConfig config;
  config.mode = SampleMode::aggregate;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = ++seed;
    benchmark::DoNotOptimize(
        simulate_quantum(kState, kParams, kSettings, config));
  }
}
BENCHMARK(BM_simulate_aggregate_full_scale);

// Per-pair throughput benchmarks report pairs/s via items processed.
void BM_simulate_per_pair_quantum(benchmark::State& state) {
  ExperimentParams params = kParams;
  params.n_pairs_per_setting = 1e5;
  SimulationConfig config;
  config.mode = SampleMode::per_pair;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = ++seed;
    benchmark::DoNotOptimize(
        simulate_quantum(kState, params, kSettings, config));
  }
  state.SetItemsProcessed(state.iterations() * 4 *
                          static_cast<std::int64_t>(1e5));
}
BENCHMARK(BM_simulate_per_pair_quantum);

void BM_simulate_per_pair_malus(benchmark::State& state) {
  ExperimentParams params = kParams;
  params.n_pairs_per_setting = 1e5;
  const MalusModel model(params.eta_a, params.eta_b);
  SimulationConfig config;
  config.mode = SampleMode::per_pair;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = ++seed;
    benchmark::DoNotOptimize(simulate_lhv(model, params, kSettings, config));
  }
  state.SetItemsProcessed(state.iterations() * 4 *
                          static_cast<std::int64_t>(1e5));
}
BENCHMARK(BM_simulate_per_pair_malus);

}  // namespace

BENCHMARK_MAIN();
