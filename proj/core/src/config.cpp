#include "bell/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "bell/errors.hpp"

namespace bell {

namespace {

constexpr std::array<std::string_view, 8> kRequiredKeys = {
    "r",       "alpha1_deg", "alpha2_deg", "beta1_deg",
    "beta2_deg", "n_pairs",  "eta_a",      "eta_b"};
constexpr std::string_view kOptionalKey = "duration_s";

bool is_known_key(std::string_view key) {
  if (key == kOptionalKey) return true;
  for (std::string_view k : kRequiredKeys) {
    if (k == key) return true;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view key, std::string_view text, int line_no) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw parse_error("config line " + std::to_string(line_no) + ": value '" +
                      std::string(text) + "' for key '" + std::string(key) +
                      "' is not a number");
  }
  return value;
}

// Values are written with the shortest decimal form that parses back to the
// same double, so to_text/parse_config round-trips exactly.
std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, double, std::less<>> values;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw parse_error("config line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + std::string(line) +
                        "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value_text = trim(line.substr(eq + 1));
    if (!is_known_key(key)) {
      throw parse_error("config line " + std::to_string(line_no) +
                        ": unknown key '" + std::string(key) + "'");
    }
    if (values.count(key) != 0) {
      throw parse_error("config line " + std::to_string(line_no) +
                        ": duplicate key '" + std::string(key) + "'");
    }
    values.emplace(std::string(key), parse_number(key, value_text, line_no));
  }

  std::string missing;
  for (std::string_view key : kRequiredKeys) {
    if (values.find(key) == values.end()) {
      if (!missing.empty()) missing += ", ";
      missing += key;
    }
  }
  if (!missing.empty()) {
    throw parse_error("config is missing required keys: " + missing);
  }

  ExperimentConfig config{
      EntangledPairState(values.find("r")->second),
      SettingAngles{Angle{values.find("alpha1_deg")->second},
                    Angle{values.find("alpha2_deg")->second},
                    Angle{values.find("beta1_deg")->second},
                    Angle{values.find("beta2_deg")->second}},
      ExperimentParams{values.find("n_pairs")->second,
                       values.find("eta_a")->second,
                       values.find("eta_b")->second, std::nullopt}};
  if (const auto it = values.find(kOptionalKey); it != values.end()) {
    config.params.duration_s = it->second;
  }
  config.settings.validate();
  config.params.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error("cannot read config file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw parse_error("cannot read config file: " + path.string());
  }
  return parse_config(buffer.str());
}

std::string to_text(const ExperimentConfig& config) {
  std::string out;
  const auto emit = [&out](std::string_view key, double value) {
    out += key;
    out += " = ";
    out += shortest(value);
    out += '\n';
  };
  emit("r", config.state.amplitude_ratio());
  emit("alpha1_deg", config.settings.alpha1.degrees);
  emit("alpha2_deg", config.settings.alpha2.degrees);
  emit("beta1_deg", config.settings.beta1.degrees);
  emit("beta2_deg", config.settings.beta2.degrees);
  emit("n_pairs", config.params.n_pairs_per_setting);
  emit("eta_a", config.params.eta_a);
  emit("eta_b", config.params.eta_b);
  if (config.params.duration_s) emit("duration_s", *config.params.duration_s);
  return out;
}

}  // namespace bell
