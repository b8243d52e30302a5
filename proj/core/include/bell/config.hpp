#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bell/experiment.hpp"
#include "bell/quantum.hpp"

namespace bell {

// The file-backed run description: state ratio, the four analyzer angles,
// pair number, efficiencies, and optional duration.
struct ExperimentConfig {
  EntangledPairState state;
  SettingAngles settings;
  ExperimentParams params;
};

// Flat `key = value` text, '#' comments, order-insensitive. Keys:
//   r, alpha1_deg, alpha2_deg, beta1_deg, beta2_deg,
//   n_pairs, eta_a, eta_b, duration_s (optional)
// Unknown or duplicate keys and unparseable numbers throw parse_error; a
// parse_error for missing keys lists every missing key. Range violations
// throw validation_error naming the key and bound.
ExperimentConfig parse_config(std::string_view text);

// Reads and parses a config file; I/O failures throw parse_error.
ExperimentConfig load_config(const std::filesystem::path& path);

// Canonical `key = value` rendering; parse_config(to_text(c)) round-trips.
std::string to_text(const ExperimentConfig& config);

}  // namespace bell
