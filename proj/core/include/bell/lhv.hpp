#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "bell/angle.hpp"
#include "bell/experiment.hpp"
#include "bell/rng.hpp"

namespace bell {

// A stochastic local hidden variable model: a shared hidden variable lambda
// is drawn per pair, then each arm detects with a probability that depends
// only on its own analyzer angle and lambda. Locality is structural — the
// Alice response never sees beta and the Bob response never sees alpha.
//
// Implementations must be safe for concurrent read-only evaluation; random
// state is owned by the caller and passed in per stream.
class LhvModel {
 public:
  virtual ~LhvModel() = default;

  virtual std::string_view name() const = 0;

  // Draw one hidden variable. The meaning of the returned value is private
  // to the model.
  virtual double sample_lambda(RngEngine& rng) const = 0;

  // Detection probabilities in [0, 1].
  virtual double alice_response(Angle alpha, double lambda) const = 0;
  virtual double bob_response(Angle beta, double lambda) const = 0;
};

// Detectors never fire: a == b == 0.
class DarkModel final : public LhvModel {
 public:
  std::string_view name() const override { return "dark"; }
  double sample_lambda(RngEngine&) const override { return 0.0; }
  double alice_response(Angle, double) const override { return 0.0; }
  double bob_response(Angle, double) const override { return 0.0; }
};

// Detectors always fire: a == b == 1. Saturates the LHV bound (J == 0).
class SaturatedModel final : public LhvModel {
 public:
  std::string_view name() const override { return "saturated"; }
  double sample_lambda(RngEngine&) const override { return 0.0; }
  double alice_response(Angle, double) const override { return 1.0; }
  double bob_response(Angle, double) const override { return 1.0; }
};

// Classical polarization model: lambda is a polarization angle theta drawn
// uniformly from [0, pi), and each arm applies Malus' law scaled by its
// efficiency:
//   a(alpha, theta) = eta_a cos^2(theta - alpha)
//   b(beta,  theta) = eta_b sin^2(theta - beta)
class MalusModel final : public LhvModel {
 public:
  MalusModel(double eta_a, double eta_b);

  std::string_view name() const override { return "malus"; }
  double sample_lambda(RngEngine& rng) const override;  // theta in radians
  double alice_response(Angle alpha, double lambda) const override;
  double bob_response(Angle beta, double lambda) const override;

  double eta_a() const { return eta_a_; }
  double eta_b() const { return eta_b_; }

 private:
  double eta_a_, eta_b_;
};

// Bundled-model registry used by the CLI. Throws validation_error for an
// unknown name. The Malus model takes its efficiencies from params.
std::unique_ptr<LhvModel> make_lhv_model(std::string_view name,
                                         const ExperimentParams& params);
std::vector<std::string_view> lhv_model_names();

// Deterministic detect/no-detect responses at the four settings: the extreme
// points of the LHV response space.
struct VertexStrategy {
  bool a1 = false, a2 = false, b1 = false, b2 = false;

  friend constexpr bool operator==(VertexStrategy, VertexStrategy) = default;
};

// J restricted to one deterministic strategy:
//   a1 + b1 + a2*b2 - a1*b1 - a1*b2 - a2*b1
int vertex_j(VertexStrategy v);

struct VertexEnumeration {
  struct Entry {
    VertexStrategy strategy;
    int j = 0;
  };
  std::array<Entry, 16> entries;  // ordered by (a1,a2,b1,b2) bit pattern
  int min_j = 0;
  int max_j = 0;
  int zero_count = 0;  // strategies that saturate the bound
};

// Exhaustive sweep of all 16 deterministic strategies. min_j = 0 is the LHV
// bound; max_j = 1.
VertexEnumeration enumerate_vertices();

// Monte Carlo expectation table over lambda: singles cells are
// N * mean(response), coincidence cells N * mean(product of responses).
// Deterministic given seed. Throws validation_error unless n_lambda >= 1.
CountsTable lhv_expected_counts(const LhvModel& model,
                                const ExperimentParams& params,
                                const SettingAngles& settings,
                                std::int64_t n_lambda, std::uint64_t seed);

struct NonnegativityReport {
  std::string_view model_name;
  std::int64_t n_lambda = 0;
  double j_mean = 0.0;       // estimate of E[J], scaled to counts (x N)
  double j_std_error = 0.0;  // standard error of j_mean
  bool passed = false;       // j_mean >= -5 * j_std_error
};

// Estimates E[J] for the model by sampling lambda and evaluating the
// per-lambda J form on the response probabilities. Requires n_lambda >= 1000.
NonnegativityReport verify_nonnegativity(const LhvModel& model,
                                         const ExperimentParams& params,
                                         const SettingAngles& settings,
                                         std::int64_t n_lambda,
                                         std::uint64_t seed);

}  // namespace bell
