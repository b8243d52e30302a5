#include "bell/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "bell/errors.hpp"
#include "bell/metrics.hpp"

namespace bell {

void SimulationConfig::validate() const {
  if (chunk_size < 1) {
    throw validation_error("chunk_size must be >= 1, got " +
                           std::to_string(chunk_size));
  }
  if (n_pairs_override) {
    for (double n : *n_pairs_override) {
      if (!std::isfinite(n) || n < 0.0) {
        throw validation_error(
            "n_pairs_override entries must be finite and >= 0, got " +
            std::to_string(n));
      }
    }
  }
}

namespace {

double pair_target(const ExperimentParams& params,
                   const SimulationConfig& config, std::size_t setting) {
  return config.n_pairs_override ? (*config.n_pairs_override)[setting]
                                 : params.n_pairs_per_setting;
}

std::int64_t draw_pair_count(const SimulationConfig& config,
                             std::uint64_t setting, double target) {
  if (config.pair_number_model == PairNumberModel::fixed || target == 0.0) {
    return std::llround(target);
  }
  RngEngine g =
      make_engine(substream_seed(config.seed, setting, StreamKind::pair_count));
  std::poisson_distribution<std::int64_t> dist(target);
  return dist(g);
}

// One multinomial draw decomposed into conditional binomials: each component
// is Binomial(remaining trials, component mass / remaining mass).
FourOutcomeTally draw_aggregate(RngEngine& g, std::int64_t m,
                                const FourOutcomeDistribution& d) {
  std::int64_t remaining = m;
  double mass = 1.0;
  const auto draw = [&](double p) -> std::int64_t {
    if (remaining <= 0) return 0;
    const double q = mass > 0.0 ? std::clamp(p / mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<std::int64_t> dist(remaining, q);
    const std::int64_t k = dist(g);
    remaining -= k;
    mass -= p;
    return k;
  };
  FourOutcomeTally t;
  t.both = draw(d.p_both);
  t.a_only = draw(d.p_a_only);
  t.b_only = draw(d.p_b_only);
  t.neither = remaining;
  return t;
}

FourOutcomeTally sample_chunk_quantum(std::uint64_t seed, std::uint64_t setting,
                                      std::uint64_t chunk, std::int64_t count,
                                      const FourOutcomeDistribution& d) {
  RngEngine g =
      make_engine(substream_seed(seed, setting, StreamKind::per_pair, chunk));
  const double t0 = d.p_both;
  const double t1 = t0 + d.p_a_only;
  const double t2 = t1 + d.p_b_only;
  FourOutcomeTally t;
  for (std::int64_t i = 0; i < count; ++i) {
    const double u = uniform01(g);
    if (u < t0) {
      ++t.both;
    } else if (u < t1) {
      ++t.a_only;
    } else if (u < t2) {
      ++t.b_only;
    } else {
      ++t.neither;
    }
  }
  return t;
}

FourOutcomeTally sample_chunk_lhv(const LhvModel& model, SettingPair sp,
                                  std::uint64_t seed, std::uint64_t setting,
                                  std::uint64_t chunk, std::int64_t count) {
  RngEngine g =
      make_engine(substream_seed(seed, setting, StreamKind::per_pair, chunk));
  FourOutcomeTally t;
  for (std::int64_t i = 0; i < count; ++i) {
    const double lambda = model.sample_lambda(g);
    const double pa = model.alice_response(sp.alpha, lambda);
    const double pb = model.bob_response(sp.beta, lambda);
    const bool a = uniform01(g) < pa;
    const bool b = uniform01(g) < pb;
    if (a && b) {
      ++t.both;
    } else if (a) {
      ++t.a_only;
    } else if (b) {
      ++t.b_only;
    } else {
      ++t.neither;
    }
  }
  return t;
}

// Runs the fixed chunk grid, optionally striding chunks across worker
// threads. The per-chunk streams are keyed on the chunk index alone, and the
// merge is an integer sum, so the result is identical for any thread count.
template <typename ChunkFn>
FourOutcomeTally run_chunks(std::int64_t m, std::int64_t chunk_size,
                            int threads, const ChunkFn& chunk_fn) {
  const std::int64_t n_chunks = (m + chunk_size - 1) / chunk_size;
  const auto chunk_count = [&](std::int64_t c) {
    return std::min(chunk_size, m - c * chunk_size);
  };
  if (threads <= 1 || n_chunks <= 1) {
    FourOutcomeTally total;
    for (std::int64_t c = 0; c < n_chunks; ++c) {
      total += chunk_fn(static_cast<std::uint64_t>(c), chunk_count(c));
    }
    return total;
  }
  std::vector<FourOutcomeTally> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  std::exception_ptr error;
  std::mutex error_mu;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        FourOutcomeTally t;
        for (std::int64_t c = w; c < n_chunks; c += threads) {
          t += chunk_fn(static_cast<std::uint64_t>(c), chunk_count(c));
        }
        partial[static_cast<std::size_t>(w)] = t;
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  FourOutcomeTally total;
  for (const FourOutcomeTally& p : partial) total += p;
  return total;
}

void validate_run_inputs(const ExperimentParams& params,
                         const SettingAngles& settings,
                         const SimulationConfig& config, int threads) {
  params.validate();
  settings.validate();
  config.validate();
  if (threads < 1) {
    throw validation_error("threads must be >= 1, got " +
                           std::to_string(threads));
  }
}

// Coincidence cells come from their own setting's tally; both singles come
// from the (alpha1, beta1) run, where each arm's marginal detections are
// both + that arm's exclusive detections.
void assemble_counts(SimulatedCounts& out) {
  out.counts.s_alpha1 =
      static_cast<double>(out.tallies[0].both + out.tallies[0].a_only);
  out.counts.s_beta1 =
      static_cast<double>(out.tallies[0].both + out.tallies[0].b_only);
  out.counts.c11 = static_cast<double>(out.tallies[0].both);
  out.counts.c12 = static_cast<double>(out.tallies[1].both);
  out.counts.c21 = static_cast<double>(out.tallies[2].both);
  out.counts.c22 = static_cast<double>(out.tallies[3].both);
}

}  // namespace

SimulatedCounts simulate_quantum(const EntangledPairState& state,
                                 const ExperimentParams& params,
                                 const SettingAngles& settings,
                                 const SimulationConfig& config, int threads) {
  validate_run_inputs(params, settings, config, threads);
  const std::array<SettingPair, 4> pairs = setting_pairs(settings);
  SimulatedCounts out;
  out.seed = config.seed;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const std::int64_t m =
        draw_pair_count(config, s, pair_target(params, config, s));
    const FourOutcomeDistribution d = joint_outcome_distribution(
        state, params.eta_a, params.eta_b, pairs[s].alpha, pairs[s].beta);
    if (config.mode == SampleMode::aggregate) {
      RngEngine g =
          make_engine(substream_seed(config.seed, s, StreamKind::aggregate));
      out.tallies[s] = draw_aggregate(g, m, d);
    } else {
      out.tallies[s] = run_chunks(
          m, config.chunk_size, threads,
          [&](std::uint64_t chunk, std::int64_t count) {
            return sample_chunk_quantum(config.seed, s, chunk, count, d);
          });
    }
    out.pairs_drawn[s] = m;
  }
  assemble_counts(out);
  return out;
}

SimulatedCounts simulate_lhv(const LhvModel& model,
                             const ExperimentParams& params,
                             const SettingAngles& settings,
                             const SimulationConfig& config, int threads) {
  validate_run_inputs(params, settings, config, threads);
  const std::array<SettingPair, 4> pairs = setting_pairs(settings);
  SimulatedCounts out;
  out.seed = config.seed;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const std::int64_t m =
        draw_pair_count(config, s, pair_target(params, config, s));
    out.tallies[s] = run_chunks(
        m, config.chunk_size, threads,
        [&](std::uint64_t chunk, std::int64_t count) {
          return sample_chunk_lhv(model, pairs[s], config.seed, s, chunk,
                                  count);
        });
    out.pairs_drawn[s] = m;
  }
  assemble_counts(out);
  return out;
}

namespace {

CountsTable table_from_cells(const std::array<double, 6>& v) {
  CountsTable t;
  t.s_alpha1 = v[0];
  t.s_beta1 = v[1];
  t.c11 = v[2];
  t.c12 = v[3];
  t.c21 = v[4];
  t.c22 = v[5];
  return t;
}

}  // namespace

SweepSummary sweep_seeds(
    const std::function<SimulatedCounts(std::uint64_t)>& run,
    std::uint64_t master_seed, int n_seeds) {
  if (!run) {
    throw validation_error("sweep_seeds: run must be callable");
  }
  if (n_seeds < 2) {
    throw validation_error("sweep_seeds: n_seeds must be >= 2, got " +
                           std::to_string(n_seeds));
  }
  SweepSummary summary;
  summary.n_seeds = n_seeds;
  summary.seeds.reserve(static_cast<std::size_t>(n_seeds));
  std::unordered_set<std::uint64_t> seen;
  for (int i = 0; i < n_seeds; ++i) {
    std::uint64_t s = substream_seed(master_seed,
                                     static_cast<std::uint64_t>(i),
                                     StreamKind::sweep);
    // The hash chain is not injective per index, so collisions, while
    // astronomically unlikely, are resolved deterministically by bumping the
    // chunk word.
    for (std::uint64_t bump = 1; !seen.insert(s).second; ++bump) {
      s = substream_seed(master_seed, static_cast<std::uint64_t>(i),
                         StreamKind::sweep, bump);
    }
    summary.seeds.push_back(s);
  }

  std::vector<std::array<double, 6>> rows;
  rows.reserve(summary.seeds.size());
  for (const std::uint64_t s : summary.seeds) {
    const SimulatedCounts result = run(s);
    rows.push_back(cells_in_order(result.counts));
    summary.j_values.push_back(j_value(result.counts));
  }

  const double n = static_cast<double>(n_seeds);
  std::array<double, 6> mean{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += row[i];
  }
  for (double& m : mean) m /= n;
  std::array<double, 6> var{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < var.size(); ++i) {
      const double d = row[i] - mean[i];
      var[i] += d * d;
    }
  }
  std::array<double, 6> sd{};
  for (std::size_t i = 0; i < sd.size(); ++i) {
    sd[i] = std::sqrt(var[i] / (n - 1.0));
  }
  summary.cell_mean = table_from_cells(mean);
  summary.cell_stddev = table_from_cells(sd);

  summary.j_mean = 0.0;
  for (const double j : summary.j_values) summary.j_mean += j;
  summary.j_mean /= n;
  double j_var = 0.0;
  summary.j_min = summary.j_values.front();
  summary.j_max = summary.j_values.front();
  for (const double j : summary.j_values) {
    const double d = j - summary.j_mean;
    j_var += d * d;
    summary.j_min = std::min(summary.j_min, j);
    summary.j_max = std::max(summary.j_max, j);
  }
  summary.j_stddev = std::sqrt(j_var / (n - 1.0));
  return summary;
}

}  // namespace bell
