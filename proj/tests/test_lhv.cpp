#include <cmath>
#include <numbers>

#include "bell/lhv.hpp"
#include "bell/metrics.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/response_table_model.hpp"

using namespace bell;
using bell_tests::reference_angles;
using bell_tests::reference_params;

TEST_SUITE_BEGIN("lhv");

TEST_CASE("vertex_j follows the deterministic-strategy form") {
  CHECK(vertex_j({false, false, false, false}) == 0);
  // a1 + b1 + a2*b2 - a1*b1 - a1*b2 - a2*b1 at selected vertices:
  CHECK(vertex_j({true, false, false, true}) == 0);   // 1+0+0-0-1-0
  CHECK(vertex_j({true, true, false, false}) == 1);   // 1+0+0-0-0-0
  CHECK(vertex_j({false, false, true, false}) == 1);  // 0+1+0-0-0-0
  CHECK(vertex_j({true, true, true, true}) == 0);     // 1+1+1-1-1-1
  CHECK(vertex_j({false, true, true, false}) == 0);   // 0+1+0-0-0-1
}

TEST_CASE("vertex enumeration covers all 16 strategies") {
  const VertexEnumeration e = enumerate_vertices();
  CHECK(e.min_j == 0);
  CHECK(e.max_j == 1);
  CHECK(e.zero_count == 8);
  // Entries are ordered by the (a1, a2, b1, b2) bit pattern.
  CHECK(e.entries[0].strategy == VertexStrategy{false, false, false, false});
  CHECK(e.entries[0b1100].strategy == VertexStrategy{true, true, false, false});
  CHECK(e.entries[0b1100].j == 1);
  int ones = 0;
  for (const VertexEnumeration::Entry& entry : e.entries) {
    CHECK(entry.j == vertex_j(entry.strategy));
    CHECK(entry.j >= 0);
    if (entry.j == 1) ++ones;
  }
  CHECK(ones == 8);
}

TEST_CASE("the per-hidden-variable J form is nonnegative on the response cube") {
  RngEngine g = make_engine(424242);
  for (int i = 0; i < 1000000; ++i) {
    const double a1 = uniform01(g);
    const double a2 = uniform01(g);
    const double b1 = uniform01(g);
    const double b2 = uniform01(g);
    const double j = a1 + b1 + a2 * b2 - a1 * b1 - a1 * b2 - a2 * b1;
    REQUIRE(j >= -1e-12);
  }
}

TEST_CASE("bundled model registry") {
  const ExperimentParams p = reference_params();
  CHECK(make_lhv_model("dark", p)->name() == "dark");
  CHECK(make_lhv_model("saturated", p)->name() == "saturated");
  CHECK(make_lhv_model("malus", p)->name() == "malus");
  CHECK_THROWS_AS(make_lhv_model("bogus", p), validation_error);
  const auto names = lhv_model_names();
  REQUIRE(names.size() == 3);
  CHECK(names[0] == "dark");
  CHECK(names[1] == "saturated");
  CHECK(names[2] == "malus");
}

TEST_CASE("Malus model responses") {
  const MalusModel m(0.7377, 0.7859);
  // Polarization aligned with the analyzer: full transmission times eta.
  CHECK(m.alice_response(Angle{30.0}, Angle{30.0}.radians()) ==
        doctest::Approx(0.7377).epsilon(1e-12));
  // Bob's response uses the crossed (sin^2) port.
  CHECK(m.bob_response(Angle{30.0}, Angle{30.0}.radians()) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  RngEngine g = make_engine(5);
  for (int i = 0; i < 1000; ++i) {
    const double lambda = m.sample_lambda(g);
    CHECK(lambda >= 0.0);
    CHECK(lambda < std::numbers::pi);
    const double a = m.alice_response(Angle{uniform01(g) * 360.0}, lambda);
    const double b = m.bob_response(Angle{uniform01(g) * 360.0}, lambda);
    REQUIRE(a >= 0.0);
    REQUIRE(a <= 0.7377 + 1e-15);
    REQUIRE(b >= 0.0);
    REQUIRE(b <= 0.7859 + 1e-15);
  }
  CHECK_THROWS_AS(MalusModel(1.2, 0.5), validation_error);
}

TEST_CASE("expected counts of the trivial models") {
  const ExperimentParams p = reference_params();
  const SettingAngles angles = reference_angles();
  const CountsTable dark =
      lhv_expected_counts(DarkModel{}, p, angles, 1000, 1);
  CHECK(dark == CountsTable{});

  const CountsTable sat =
      lhv_expected_counts(SaturatedModel{}, p, angles, 1000, 1);
  const double n = p.n_pairs_per_setting;
  CHECK(sat.s_alpha1 == n);
  CHECK(sat.s_beta1 == n);
  CHECK(sat.c11 == n);
  CHECK(sat.c12 == n);
  CHECK(sat.c21 == n);
  CHECK(sat.c22 == n);
  CHECK(j_value(sat) == 0.0);

  CHECK_THROWS_AS(lhv_expected_counts(DarkModel{}, p, angles, 0, 1),
                  validation_error);
}

TEST_CASE("Malus expected counts agree with the closed form") {
  const ExperimentParams p = reference_params();
  const CountsTable t = lhv_expected_counts(
      MalusModel(p.eta_a, p.eta_b), p, reference_angles(), 1000000, 20260814);
  const std::array<double, 6> cells = cells_in_order(t);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CAPTURE(i);
    // 0.5% relative covers > 5 standard errors at 1e6 lambda samples.
    CHECK(std::abs(cells[i] / bell_tests::kMalusCells[i] - 1.0) < 0.005);
  }
  CHECK(std::abs(j_value(t) / bell_tests::kMalusJ - 1.0) < 0.02);
}

TEST_CASE("expected counts are linear in the pair number") {
  const SettingAngles angles = reference_angles();
  ExperimentParams p = reference_params();
  const MalusModel m(p.eta_a, p.eta_b);
  const CountsTable base = lhv_expected_counts(m, p, angles, 20000, 99);
  p.n_pairs_per_setting *= 2.5;
  const CountsTable scaled = lhv_expected_counts(m, p, angles, 20000, 99);
  const std::array<double, 6> b = cells_in_order(base);
  const std::array<double, 6> s = cells_in_order(scaled);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(s[i] == doctest::Approx(2.5 * b[i]).epsilon(1e-12));
  }
}

TEST_CASE("swapping Bob's settings cannot touch Alice's singles") {
  const ExperimentParams p = reference_params();
  const MalusModel m(p.eta_a, p.eta_b);
  SettingAngles angles = reference_angles();
  const CountsTable base = lhv_expected_counts(m, p, angles, 50000, 7);
  std::swap(angles.beta1, angles.beta2);
  const CountsTable swapped = lhv_expected_counts(m, p, angles, 50000, 7);
  // Identical lambda stream, so equality is exact, not just statistical.
  CHECK(swapped.s_alpha1 == base.s_alpha1);
  CHECK(swapped.c11 == base.c12);
  CHECK(swapped.c12 == base.c11);
  CHECK(swapped.c21 == base.c22);
  CHECK(swapped.c22 == base.c21);
}

TEST_CASE("nonnegativity verification of the bundled models") {
  const ExperimentParams p = reference_params();
  const SettingAngles angles = reference_angles();

  const NonnegativityReport sat =
      verify_nonnegativity(SaturatedModel{}, p, angles, 1000, 3);
  CHECK(sat.j_mean == 0.0);
  CHECK(sat.j_std_error == 0.0);
  CHECK(sat.passed);

  const NonnegativityReport dark =
      verify_nonnegativity(DarkModel{}, p, angles, 1000, 3);
  CHECK(dark.j_mean == 0.0);
  CHECK(dark.passed);

  const NonnegativityReport malus = verify_nonnegativity(
      MalusModel(p.eta_a, p.eta_b), p, angles, 200000, 3);
  CHECK(malus.passed);
  // At 2e5 samples the standard error is well under 1% of the mean.
  CHECK(std::abs(malus.j_mean / bell_tests::kMalusJ - 1.0) < 0.05);
  CHECK(malus.j_std_error > 0.0);
  CHECK(malus.n_lambda == 200000);
  CHECK(malus.model_name == "malus");

  CHECK_THROWS_AS(verify_nonnegativity(DarkModel{}, p, angles, 999, 3),
                  validation_error);
}

TEST_CASE("random response-table models satisfy the bound") {
  const ExperimentParams p = reference_params();
  const SettingAngles angles = reference_angles();
  for (int model_idx = 0; model_idx < 100; ++model_idx) {
    const bell_tests::ResponseTableModel model(
        static_cast<std::uint64_t>(model_idx) + 1);
    const NonnegativityReport r =
        verify_nonnegativity(model, p, angles, 2000, 17);
    CAPTURE(model_idx);
    REQUIRE(r.passed);
  }
}

TEST_SUITE_END();
