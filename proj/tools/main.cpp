// belltest: command-line workbench for two-channel Bell-test count data.
//
// Subcommands:
//   predict    closed-form expected counts for a configuration
//   analyze    observed counts vs the quantum prediction (ratios, J, sigma)
//   simulate   Monte Carlo rerun under the quantum or a local model
//   lhv-check  vertex enumeration + Monte Carlo check of the J >= 0 bound
//
// Exit codes: 0 ok, 1 usage, 2 file/parse error, 3 validation error,
// 4 internal error.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "bell/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Bell-test count workbench: closed-form predictions, observed-count "
      "analysis, Monte Carlo reruns, and local-model bound checks."};
  app.require_subcommand(1);

  const std::map<std::string, bell::SampleMode> mode_map{
      {"aggregate", bell::SampleMode::aggregate},
      {"per-pair", bell::SampleMode::per_pair}};
  const std::map<std::string, bell::PairNumberModel> pair_map{
      {"fixed", bell::PairNumberModel::fixed},
      {"poisson", bell::PairNumberModel::poisson}};

  bell::cli::PredictArgs predict;
  CLI::App* cmd_predict = app.add_subcommand(
      "predict", "Write the expected counts table for a configuration");
  cmd_predict->add_option("--config", predict.config_path,
                          "experiment configuration file")
      ->required();
  cmd_predict->add_option("--out", predict.out_csv,
                          "output CSV path for the expected counts")
      ->required();

  bell::cli::AnalyzeArgs analyze;
  CLI::App* cmd_analyze = app.add_subcommand(
      "analyze", "Compare observed counts against the quantum prediction");
  cmd_analyze->add_option("--config", analyze.config_path,
                          "experiment configuration file")
      ->required();
  cmd_analyze->add_option("--counts", analyze.counts_path,
                          "observed counts CSV")
      ->required();
  cmd_analyze->add_option("--report", analyze.out_report,
                          "also write the report to this path");

  bell::cli::SimulateArgs simulate;
  CLI::App* cmd_simulate = app.add_subcommand(
      "simulate", "Monte Carlo rerun of the experiment under a model");
  cmd_simulate->add_option("--config", simulate.config_path,
                           "experiment configuration file")
      ->required();
  cmd_simulate->add_option("--model", simulate.model,
                           "quantum or lhv:<name> (dark, saturated, malus)")
      ->capture_default_str();
  cmd_simulate->add_option("--out", simulate.out_csv,
                           "output CSV path for the simulated counts")
      ->required();
  cmd_simulate->add_option("--seed", simulate.seed, "master RNG seed")
      ->capture_default_str();
  cmd_simulate->add_option("--mode", simulate.mode, "sampling mode")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case))
      ->default_str("aggregate");
  cmd_simulate->add_option("--pair-model", simulate.pair_model,
                           "pair-number model per setting")
      ->transform(CLI::CheckedTransformer(pair_map, CLI::ignore_case))
      ->default_str("fixed");
  cmd_simulate->add_option("--chunk-size", simulate.chunk_size,
                           "pairs per RNG chunk in per-pair mode")
      ->capture_default_str();
  cmd_simulate->add_option("--threads", simulate.threads,
                           "worker threads in per-pair mode")
      ->capture_default_str();

  bell::cli::LhvCheckArgs lhv_check;
  CLI::App* cmd_lhv_check = app.add_subcommand(
      "lhv-check", "Check the local-model bound J >= 0 for a bundled model");
  cmd_lhv_check->add_option("--config", lhv_check.config_path,
                            "experiment configuration file")
      ->required();
  cmd_lhv_check->add_option("--model", lhv_check.model,
                            "lhv:<name> (dark, saturated, malus)")
      ->capture_default_str();
  cmd_lhv_check->add_option("--n-lambda", lhv_check.n_lambda,
                            "number of hidden-variable samples (>= 1000)")
      ->capture_default_str();
  cmd_lhv_check->add_option("--seed", lhv_check.seed, "master RNG seed")
      ->capture_default_str();
  cmd_lhv_check->add_option("--report", lhv_check.out_report,
                            "also write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? bell::cli::kExitOk : bell::cli::kExitUsage;
  }

  if (app.got_subcommand(cmd_predict)) {
    return bell::cli::run_predict(predict, std::cout, std::cerr);
  }
  if (app.got_subcommand(cmd_analyze)) {
    return bell::cli::run_analyze(analyze, std::cout, std::cerr);
  }
  if (app.got_subcommand(cmd_simulate)) {
    return bell::cli::run_simulate(simulate, std::cout, std::cerr);
  }
  if (app.got_subcommand(cmd_lhv_check)) {
    return bell::cli::run_lhv_check(lhv_check, std::cout, std::cerr);
  }
  return bell::cli::kExitUsage;
}
