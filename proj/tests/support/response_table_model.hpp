#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bell/lhv.hpp"
#include "bell/rng.hpp"

namespace bell_tests {

// Randomly generated stochastic local model for property sweeps: lambda is
// uniform in [0, 1) and each arm's response is a table lookup that is
// piecewise-constant in lambda (lambda_bins cells) and in the analyzer angle
// (angle_bins cells over [0, 360) degrees). Locality is structural: the
// Alice table never sees beta and vice versa.
class ResponseTableModel final : public bell::LhvModel {
 public:
  explicit ResponseTableModel(std::uint64_t seed, int lambda_bins = 8,
                              int angle_bins = 8)
      : lambda_bins_(lambda_bins), angle_bins_(angle_bins) {
    bell::RngEngine g =
        bell::make_engine(bell::mix64(seed ^ 0x7ab1e5eedULL));
    const std::size_t n =
        static_cast<std::size_t>(lambda_bins_) *
        static_cast<std::size_t>(angle_bins_);
    alice_.resize(n);
    bob_.resize(n);
    for (double& v : alice_) v = bell::uniform01(g);
    for (double& v : bob_) v = bell::uniform01(g);
  }

  std::string_view name() const override { return "response-table"; }

  double sample_lambda(bell::RngEngine& rng) const override {
    return bell::uniform01(rng);
  }

  double alice_response(bell::Angle alpha, double lambda) const override {
    return alice_[index(lambda, alpha)];
  }

  double bob_response(bell::Angle beta, double lambda) const override {
    return bob_[index(lambda, beta)];
  }

 private:
  std::size_t index(double lambda, bell::Angle angle) const {
    const int lb = std::min(
        static_cast<int>(lambda * lambda_bins_), lambda_bins_ - 1);
    double deg = std::fmod(angle.degrees, 360.0);
    if (deg < 0.0) deg += 360.0;
    const int ab = std::min(
        static_cast<int>(deg / 360.0 * angle_bins_), angle_bins_ - 1);
    return static_cast<std::size_t>(lb) * static_cast<std::size_t>(angle_bins_) +
           static_cast<std::size_t>(ab);
  }

  int lambda_bins_;
  int angle_bins_;
  std::vector<double> alice_;
  std::vector<double> bob_;
};

}  // namespace bell_tests
