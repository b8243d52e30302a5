#include "bell/lhv.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bell/errors.hpp"

namespace bell {

namespace {

std::string known_model_list() {
  std::string s;
  for (std::string_view name : lhv_model_names()) {
    if (!s.empty()) s += ", ";
    s += name;
  }
  return s;
}

}  // namespace

MalusModel::MalusModel(double eta_a, double eta_b)
    : eta_a_(eta_a), eta_b_(eta_b) {
  if (!(eta_a >= 0.0 && eta_a <= 1.0)) {
    throw validation_error("eta_a = " + std::to_string(eta_a) +
                           " out of range [0, 1]");
  }
  if (!(eta_b >= 0.0 && eta_b <= 1.0)) {
    throw validation_error("eta_b = " + std::to_string(eta_b) +
                           " out of range [0, 1]");
  }
}

double MalusModel::sample_lambda(RngEngine& rng) const {
  return uniform01(rng) * std::numbers::pi;
}

double MalusModel::alice_response(Angle alpha, double lambda) const {
  const double c = std::cos(lambda - alpha.radians());
  return eta_a_ * c * c;
}

double MalusModel::bob_response(Angle beta, double lambda) const {
  const double s = std::sin(lambda - beta.radians());
  return eta_b_ * s * s;
}

std::unique_ptr<LhvModel> make_lhv_model(std::string_view name,
                                         const ExperimentParams& params) {
  if (name == "dark") return std::make_unique<DarkModel>();
  if (name == "saturated") return std::make_unique<SaturatedModel>();
  if (name == "malus") {
    return std::make_unique<MalusModel>(params.eta_a, params.eta_b);
  }
  throw validation_error("unknown local model '" + std::string(name) +
                         "' (known models: " + known_model_list() + ")");
}

std::vector<std::string_view> lhv_model_names() {
  return {"dark", "saturated", "malus"};
}

int vertex_j(VertexStrategy v) {
  const int a1 = v.a1 ? 1 : 0;
  const int a2 = v.a2 ? 1 : 0;
  const int b1 = v.b1 ? 1 : 0;
  const int b2 = v.b2 ? 1 : 0;
  return a1 + b1 + a2 * b2 - a1 * b1 - a1 * b2 - a2 * b1;
}

VertexEnumeration enumerate_vertices() {
  VertexEnumeration e;
  e.min_j = 7;   // above any attainable value
  e.max_j = -7;  // below any attainable value
  for (int bits = 0; bits < 16; ++bits) {
    VertexStrategy v{.a1 = ((bits >> 3) & 1) != 0,
                     .a2 = ((bits >> 2) & 1) != 0,
                     .b1 = ((bits >> 1) & 1) != 0,
                     .b2 = ((bits >> 0) & 1) != 0};
    const int j = vertex_j(v);
    e.entries[static_cast<std::size_t>(bits)] = {v, j};
    e.min_j = std::min(e.min_j, j);
    e.max_j = std::max(e.max_j, j);
    if (j == 0) ++e.zero_count;
  }
  return e;
}

namespace {

struct ResponseQuad {
  double a1, a2, b1, b2;
};

ResponseQuad evaluate_responses(const LhvModel& model,
                                const SettingAngles& settings, double lambda) {
  return {model.alice_response(settings.alpha1, lambda),
          model.alice_response(settings.alpha2, lambda),
          model.bob_response(settings.beta1, lambda),
          model.bob_response(settings.beta2, lambda)};
}

}  // namespace

CountsTable lhv_expected_counts(const LhvModel& model,
                                const ExperimentParams& params,
                                const SettingAngles& settings,
                                std::int64_t n_lambda, std::uint64_t seed) {
  params.validate();
  settings.validate();
  if (n_lambda < 1) {
    throw validation_error("lhv_expected_counts: n_lambda must be >= 1, got " +
                           std::to_string(n_lambda));
  }
  RngEngine rng = make_engine(substream_seed(seed, 0, StreamKind::lambda));
  double sum_a1 = 0.0, sum_b1 = 0.0;
  double sum_c11 = 0.0, sum_c12 = 0.0, sum_c21 = 0.0, sum_c22 = 0.0;
  for (std::int64_t i = 0; i < n_lambda; ++i) {
    const double lambda = model.sample_lambda(rng);
    const ResponseQuad q = evaluate_responses(model, settings, lambda);
    sum_a1 += q.a1;
    sum_b1 += q.b1;
    sum_c11 += q.a1 * q.b1;
    sum_c12 += q.a1 * q.b2;
    sum_c21 += q.a2 * q.b1;
    sum_c22 += q.a2 * q.b2;
  }
  const double scale = params.n_pairs_per_setting / static_cast<double>(n_lambda);
  CountsTable t;
  t.s_alpha1 = scale * sum_a1;
  t.s_beta1 = scale * sum_b1;
  t.c11 = scale * sum_c11;
  t.c12 = scale * sum_c12;
  t.c21 = scale * sum_c21;
  t.c22 = scale * sum_c22;
  return t;
}

NonnegativityReport verify_nonnegativity(const LhvModel& model,
                                         const ExperimentParams& params,
                                         const SettingAngles& settings,
                                         std::int64_t n_lambda,
                                         std::uint64_t seed) {
  params.validate();
  settings.validate();
  if (n_lambda < 1000) {
    throw validation_error(
        "verify_nonnegativity: n_lambda must be >= 1000, got " +
        std::to_string(n_lambda));
  }
  RngEngine rng = make_engine(substream_seed(seed, 0, StreamKind::lambda));
  // Welford accumulation of the per-lambda J form. For every lambda,
  //   j(lambda) = a1 + b1 + a2 b2 - a1 b1 - a1 b2 - a2 b1
  //             = a1 (1 - b1) + b1 (1 - a2) + (a2 - a1) b2 + (a2 b1 - a1 b1)
  // is a multilinear function of responses in [0, 1], hence bounded below by
  // its minimum over the 16 deterministic vertices, which is 0.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < n_lambda; ++i) {
    const double lambda = model.sample_lambda(rng);
    const ResponseQuad q = evaluate_responses(model, settings, lambda);
    const double j = q.a1 + q.b1 + q.a2 * q.b2 - q.a1 * q.b1 - q.a1 * q.b2 -
                     q.a2 * q.b1;
    const double delta = j - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (j - mean);
  }
  const double n = static_cast<double>(n_lambda);
  const double variance = m2 / (n - 1.0);
  NonnegativityReport report;
  report.model_name = model.name();
  report.n_lambda = n_lambda;
  report.j_mean = params.n_pairs_per_setting * mean;
  report.j_std_error =
      params.n_pairs_per_setting * std::sqrt(variance / n);
  report.passed = report.j_mean >= -5.0 * report.j_std_error;
  return report;
}

}  // namespace bell
