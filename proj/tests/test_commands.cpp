#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bell/commands.hpp"
#include "bell/config.hpp"
#include "bell/counts_io.hpp"
#include "bell/metrics.hpp"
#include "bell/predictor.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace bell;
using namespace bell::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigPath = BELLTEST_DATA_DIR "/experiment.cfg";
const fs::path kCountsPath = BELLTEST_DATA_DIR "/observed_counts.csv";

struct TempDir {
  fs::path path;
  explicit TempDir(const char* tag)
      : path(fs::temp_directory_path() / tag) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

bool contains(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("commands");

TEST_CASE("predict writes the expected table and report") {
  TempDir dir("belltest-cmd-predict");
  std::ostringstream out, err;
  const PredictArgs args{kConfigPath, dir.path / "predicted.csv"};
  REQUIRE(run_predict(args, out, err) == kExitOk);
  CHECK(err.str().empty());

  // The CSV must round-trip the in-memory prediction bit-exactly.
  const ExperimentConfig config = load_config(kConfigPath);
  const CountsTable predicted =
      predict_table(config.state, config.params, config.settings);
  CHECK(load_counts(args.out_csv) == predicted);

  const std::string text = out.str();
  CHECK(contains(text, "prediction (quantum model)"));
  CHECK(contains(text, "r = 0.297"));
  // Headline cells, in thousands.
  CHECK(contains(text, "1535"));
  CHECK(contains(text, "1683"));
  CHECK(contains(text, "12.25"));
  CHECK(contains(text, "rates per second"));
  CHECK(contains(text, "J statistic:"));
  CHECK(contains(text, kJConvention));
  CHECK(contains(text, kSigmaEstimator));

  // Byte-identical on a rerun.
  std::ostringstream again;
  REQUIRE(run_predict(args, again, err) == kExitOk);
  CHECK(again.str() == text);
}

TEST_CASE("predict error paths map to the exit-code contract") {
  TempDir dir("belltest-cmd-predict-err");
  std::ostringstream out, err;
  CHECK(run_predict({dir.path / "missing.cfg", dir.path / "out.csv"}, out,
                    err) == kExitParse);
  CHECK(contains(err.str(), "cannot read config file"));

  std::ofstream(dir.path / "bad.cfg") << "r = 0.297\n";
  std::ostringstream err2;
  CHECK(run_predict({dir.path / "bad.cfg", dir.path / "out.csv"}, out, err2) ==
        kExitParse);
  CHECK(contains(err2.str(), "missing required keys"));

  std::ofstream(dir.path / "invalid.cfg")
      << "r = 0.297\nalpha1_deg = 85.6\nalpha2_deg = 118.0\n"
         "beta1_deg = -5.4\nbeta2_deg = 25.9\nn_pairs = 24.2e6\n"
         "eta_a = 1.5\neta_b = 0.7859\n";
  std::ostringstream err3;
  CHECK(run_predict({dir.path / "invalid.cfg", dir.path / "out.csv"}, out,
                    err3) == kExitValidation);
  CHECK(contains(err3.str(), "out of range"));
}

TEST_CASE("analyze reports the observed-versus-predicted comparison") {
  TempDir dir("belltest-cmd-analyze");
  const fs::path report_path = dir.path / "analysis.txt";
  std::ostringstream out, err;
  const AnalyzeArgs args{kConfigPath, kCountsPath, report_path};
  REQUIRE(run_analyze(args, out, err) == kExitOk);
  CHECK(err.str().empty());

  const std::string text = out.str();
  CHECK(contains(text, "analysis (observed vs quantum prediction)"));
  CHECK(contains(text, "J = -126210"));
  CHECK(contains(text, "J/sigma = -48.7599"));
  CHECK(contains(text, "5.69506"));
  CHECK(contains(text, "cells outside ratio band [0.9, 1.1]: 1 of 6"));
  CHECK(contains(text, "C22: observed/predicted = 5.69506"));
  CHECK(contains(text, kSigmaEstimator));

  // The file copy equals the stream copy.
  std::ifstream in(report_path, std::ios::binary);
  std::stringstream file_text;
  file_text << in.rdbuf();
  CHECK(file_text.str() == text);
}

TEST_CASE("analyzing the prediction against itself flags nothing") {
  TempDir dir("belltest-cmd-self");
  std::ostringstream out, err;
  const ExperimentConfig config = load_config(kConfigPath);
  write_counts_csv(dir.path / "predicted.csv",
                   predict_table(config.state, config.params,
                                 config.settings));
  REQUIRE(run_analyze({kConfigPath, dir.path / "predicted.csv", std::nullopt},
                      out, err) == kExitOk);
  CHECK(contains(out.str(), ": 0 of 6"));
  // Within 1% of the published -196,750 (the unrounded prediction).
  CHECK(contains(out.str(), "observed   J = -197067"));
}

TEST_CASE("analyze error paths") {
  std::ostringstream out, err;
  CHECK(run_analyze({kConfigPath, "/no/such/counts.csv", std::nullopt}, out,
                    err) == kExitParse);
  CHECK(contains(err.str(), "cannot read counts file"));
}

TEST_CASE("simulate runs both model families") {
  TempDir dir("belltest-cmd-sim");
  SimulateArgs args;
  args.config_path = kConfigPath;
  args.out_csv = dir.path / "sim.csv";
  args.seed = 42;

  std::ostringstream out, err;
  REQUIRE(run_simulate(args, out, err) == kExitOk);
  CHECK(err.str().empty());
  const std::string text = out.str();
  CHECK(contains(text, "simulation (quantum)"));
  CHECK(contains(text, "mode       = aggregate"));
  CHECK(contains(text, "seed       = 42"));
  CHECK(contains(text, "pair model = fixed"));
  const CountsTable cells = load_counts(args.out_csv);
  CHECK(cells.s_alpha1 > 0.0);
  CHECK(cells.c22 > 0.0);

  // Identical arguments reproduce the identical report.
  std::ostringstream again;
  REQUIRE(run_simulate(args, again, err) == kExitOk);
  CHECK(again.str() == text);

  args.model = "lhv:dark";
  std::ostringstream lhv_out;
  REQUIRE(run_simulate(args, lhv_out, err) == kExitOk);
  CHECK(contains(lhv_out.str(), "simulation (lhv:dark)"));
  CHECK(contains(lhv_out.str(),
                 "per-pair (local models always sample per pair)"));
  CHECK(load_counts(args.out_csv) == CountsTable{});
}

TEST_CASE("simulate rejects unknown models as usage errors") {
  SimulateArgs args;
  args.config_path = kConfigPath;
  args.out_csv = fs::temp_directory_path() / "belltest-sim-reject.csv";
  std::ostringstream out;
  for (const char* bad : {"magic", "lhv:bogus", "Quantum", "lhv:"}) {
    std::ostringstream err;
    CAPTURE(bad);
    args.model = bad;
    CHECK(run_simulate(args, out, err) == kExitUsage);
    CHECK(contains(err.str(), "usage error: unknown model"));
    CHECK(contains(err.str(), "quantum, lhv:dark, lhv:saturated, lhv:malus"));
  }
}

TEST_CASE("simulate surfaces validation failures from the run itself") {
  SimulateArgs args;
  args.config_path = kConfigPath;
  args.out_csv = fs::temp_directory_path() / "belltest-sim-invalid.csv";
  args.threads = 0;
  std::ostringstream out, err;
  CHECK(run_simulate(args, out, err) == kExitValidation);
  std::ostringstream err2;
  args.threads = 1;
  args.chunk_size = 0;
  CHECK(run_simulate(args, out, err2) == kExitValidation);
}

TEST_CASE("lhv-check renders the vertex table and the bound verdict") {
  LhvCheckArgs args;
  args.config_path = kConfigPath;
  args.n_lambda = 5000;
  args.seed = 9;
  std::ostringstream out, err;
  REQUIRE(run_lhv_check(args, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(contains(text, "local-model check (lhv:malus)"));
  CHECK(contains(text, "a1 a2 b1 b2 | J"));
  CHECK(contains(text, "min J = 0, max J = 1, strategies with J == 0: 8"));
  CHECK(contains(text, "every deterministic strategy satisfies J >= 0"));
  CHECK(contains(text, "n_lambda   = 5000"));
  CHECK(contains(text, "verdict    = PASS"));

  std::ostringstream err2;
  args.model = "quantum";
  CHECK(run_lhv_check(args, out, err2) == kExitUsage);
  CHECK(contains(err2.str(), "lhv-check requires a local model"));

  std::ostringstream err3;
  args.model = "lhv:dark";
  args.n_lambda = 10;
  CHECK(run_lhv_check(args, out, err3) == kExitValidation);
  CHECK(contains(err3.str(), "n_lambda"));
}

TEST_CASE("model selector grammar") {
  CHECK(parse_model_selector("quantum").quantum);
  const ModelSelector m = parse_model_selector("lhv:saturated");
  CHECK_FALSE(m.quantum);
  CHECK(m.lhv_name == "saturated");
  CHECK_THROWS_AS(parse_model_selector("lhv:unknown"), validation_error);
  CHECK_THROWS_AS(parse_model_selector(""), validation_error);
}

#ifdef BELLTEST_CLI_PATH
namespace {

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(BELLTEST_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("command-line binary honors the exit-code contract") {
  TempDir dir("belltest-cli-e2e");
  const std::string cfg = kConfigPath.string();
  CHECK(run_cli("") == kExitUsage);                  // subcommand required
  CHECK(run_cli("--help") == kExitOk);
  CHECK(run_cli("predict --help") == kExitOk);
  CHECK(run_cli("predict") == kExitUsage);           // --config required
  CHECK(run_cli("frobnicate") == kExitUsage);
  CHECK(run_cli("simulate --config " + cfg + " --out " +
                (dir.path / "s.csv").string() + " --mode sideways") ==
        kExitUsage);

  const std::string pred_csv = (dir.path / "p.csv").string();
  CHECK(run_cli("predict --config " + cfg + " --out " + pred_csv) == kExitOk);
  CHECK(fs::exists(pred_csv));
  CHECK(run_cli("analyze --config " + cfg + " --counts " +
                kCountsPath.string()) == kExitOk);
  CHECK(run_cli("analyze --config " + cfg + " --counts /nope.csv") ==
        kExitParse);
  CHECK(run_cli("simulate --config " + cfg + " --out " +
                (dir.path / "s.csv").string() + " --seed 7") == kExitOk);
  CHECK(run_cli("lhv-check --config " + cfg +
                " --model lhv:saturated --n-lambda 2000") == kExitOk);
  CHECK(run_cli("lhv-check --config " + cfg + " --model quantum") ==
        kExitUsage);
}
#endif  // BELLTEST_CLI_PATH

TEST_SUITE_END();
