#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "bell/simulate.hpp"

namespace bell::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitInternal = 4;

// Model selector: "quantum" or "lhv:<name>" with <name> one of the bundled
// local models.
struct ModelSelector {
  bool quantum = true;
  std::string lhv_name;  // meaningful when quantum == false
};

// Throws validation_error (mapped to a usage error by the commands) when the
// selector is not "quantum" or a known "lhv:<name>".
ModelSelector parse_model_selector(std::string_view text);

struct PredictArgs {
  std::filesystem::path config_path;
  std::filesystem::path out_csv;
};

struct AnalyzeArgs {
  std::filesystem::path config_path;
  std::filesystem::path counts_path;
  std::optional<std::filesystem::path> out_report;  // default: stdout only
};

struct SimulateArgs {
  std::filesystem::path config_path;
  std::string model = "quantum";
  std::filesystem::path out_csv;
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::aggregate;
  PairNumberModel pair_model = PairNumberModel::fixed;
  std::int64_t chunk_size = 1 << 20;
  int threads = 1;
};

struct LhvCheckArgs {
  std::filesystem::path config_path;
  std::string model = "lhv:malus";
  std::int64_t n_lambda = 1'000'000;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out_report;
};

// Subcommand bodies. Reports go to `out`; error diagnostics to `err`. The
// return value is the process exit code per the contract above.
int run_predict(const PredictArgs& args, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int run_simulate(const SimulateArgs& args, std::ostream& out,
                 std::ostream& err);
int run_lhv_check(const LhvCheckArgs& args, std::ostream& out,
                  std::ostream& err);

}  // namespace bell::cli
