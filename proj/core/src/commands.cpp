#include "bell/commands.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "bell/config.hpp"
#include "bell/counts_io.hpp"
#include "bell/errors.hpp"
#include "bell/lhv.hpp"
#include "bell/metrics.hpp"
#include "bell/predictor.hpp"
#include "bell/report.hpp"

namespace bell::cli {

namespace {

// Maps the in-flight exception onto the exit-code contract. Call from a
// catch-all handler only.
int report_exception(std::ostream& err) {
  try {
    throw;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (...) {
    err << "internal error: unknown exception\n";
    return kExitInternal;
  }
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw parse_error("cannot write file: " + path.string());
  }
  out << text;
  out.flush();
  if (!out) {
    throw parse_error("cannot write file: " + path.string());
  }
}

}  // namespace

ModelSelector parse_model_selector(std::string_view text) {
  if (text == "quantum") {
    return {true, {}};
  }
  constexpr std::string_view kPrefix = "lhv:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    const std::string_view name = text.substr(kPrefix.size());
    for (std::string_view known : lhv_model_names()) {
      if (known == name) {
        return {false, std::string(name)};
      }
    }
  }
  std::string known = "quantum";
  for (std::string_view name : lhv_model_names()) {
    known += ", lhv:";
    known += name;
  }
  throw validation_error("unknown model '" + std::string(text) +
                         "' (expected one of: " + known + ")");
}

int run_predict(const PredictArgs& args, std::ostream& out,
                std::ostream& err) {
  try {
    const ExperimentConfig config = load_config(args.config_path);
    const CountsTable predicted =
        predict_table(config.state, config.params, config.settings);
    write_counts_csv(args.out_csv, predicted);
    out << render_prediction_report(config, predicted);
    return kExitOk;
  } catch (...) {
    return report_exception(err);
  }
}

int run_analyze(const AnalyzeArgs& args, std::ostream& out,
                std::ostream& err) {
  try {
    const ExperimentConfig config = load_config(args.config_path);
    const CountsTable observed = load_counts(args.counts_path);
    const CountsTable predicted =
        predict_table(config.state, config.params, config.settings);
    const JResult observed_j = significance(observed);
    const JResult predicted_j = significance(predicted);
    const AnomalyReport anomalies = anomaly_report(observed, predicted);
    const std::string text = render_analysis_report(
        config, observed, predicted, observed_j, predicted_j, anomalies);
    out << text;
    if (args.out_report) {
      write_text_file(*args.out_report, text);
    }
    return kExitOk;
  } catch (...) {
    return report_exception(err);
  }
}

int run_simulate(const SimulateArgs& args, std::ostream& out,
                 std::ostream& err) {
  ModelSelector selector;
  try {
    selector = parse_model_selector(args.model);
  } catch (const validation_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const ExperimentConfig config = load_config(args.config_path);
    SimulationConfig sim;
    sim.mode = args.mode;
    sim.pair_number_model = args.pair_model;
    sim.seed = args.seed;
    sim.chunk_size = args.chunk_size;
    SimulatedCounts result;
    std::string model_label = "quantum";
    if (selector.quantum) {
      result = simulate_quantum(config.state, config.params, config.settings,
                                sim, args.threads);
    } else {
      model_label = "lhv:" + selector.lhv_name;
      const auto model = make_lhv_model(selector.lhv_name, config.params);
      result = simulate_lhv(*model, config.params, config.settings, sim,
                            args.threads);
    }
    write_counts_csv(args.out_csv, result.counts);
    out << render_simulation_report(config, model_label, sim, result);
    return kExitOk;
  } catch (...) {
    return report_exception(err);
  }
}

int run_lhv_check(const LhvCheckArgs& args, std::ostream& out,
                  std::ostream& err) {
  ModelSelector selector;
  try {
    selector = parse_model_selector(args.model);
    if (selector.quantum) {
      throw validation_error(
          "lhv-check requires a local model (one of lhv:dark, lhv:saturated, "
          "lhv:malus)");
    }
  } catch (const validation_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const ExperimentConfig config = load_config(args.config_path);
    const auto model = make_lhv_model(selector.lhv_name, config.params);
    const VertexEnumeration vertices = enumerate_vertices();
    const NonnegativityReport nonneg = verify_nonnegativity(
        *model, config.params, config.settings, args.n_lambda, args.seed);
    const std::string text = render_lhv_check_report(
        "lhv:" + selector.lhv_name, vertices, nonneg, args.seed);
    out << text;
    if (args.out_report) {
      write_text_file(*args.out_report, text);
    }
    return kExitOk;
  } catch (...) {
    return report_exception(err);
  }
}

}  // namespace bell::cli
