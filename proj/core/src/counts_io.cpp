#include "bell/counts_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "bell/errors.hpp"

namespace bell {

namespace {

constexpr std::string_view kHeader = "quantity,value";

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

int index_of_quantity(std::string_view name) {
  for (std::size_t i = 0; i < kCountsQuantities.size(); ++i) {
    if (name == kCountsQuantities[i]) return static_cast<int>(i);
  }
  return -1;
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace

CountsTable parse_counts(std::string_view text) {
  std::array<double, 6> cells{};
  std::array<bool, 6> present{};

  int line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;

    if (!header_seen) {
      if (line != kHeader) {
        throw parse_error("counts line " + std::to_string(line_no) +
                          ": expected header 'quantity,value', got '" +
                          std::string(line) + "'");
      }
      header_seen = true;
      continue;
    }

    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw parse_error("counts line " + std::to_string(line_no) +
                        ": expected 'quantity,value', got '" +
                        std::string(line) + "'");
    }
    const std::string_view name = line.substr(0, comma);
    const std::string_view value_text = line.substr(comma + 1);
    const int idx = index_of_quantity(name);
    if (idx < 0) {
      throw parse_error("counts line " + std::to_string(line_no) +
                        ": unknown quantity '" + std::string(name) + "'");
    }
    if (present[static_cast<std::size_t>(idx)]) {
      throw parse_error("counts line " + std::to_string(line_no) +
                        ": duplicate quantity '" + std::string(name) + "'");
    }
    double value = 0.0;
    const char* first = value_text.data();
    const char* last = value_text.data() + value_text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value_text.empty()) {
      throw parse_error("counts line " + std::to_string(line_no) +
                        ": value '" + std::string(value_text) + "' for '" +
                        std::string(name) + "' is not a number");
    }
    cells[static_cast<std::size_t>(idx)] = value;
    present[static_cast<std::size_t>(idx)] = true;
  }

  if (!header_seen) {
    throw parse_error("counts file is empty; expected header 'quantity,value'");
  }
  std::string missing;
  for (std::size_t i = 0; i < present.size(); ++i) {
    if (!present[i]) {
      if (!missing.empty()) missing += ", ";
      missing += kCountsQuantities[i];
    }
  }
  if (!missing.empty()) {
    throw parse_error("counts file is missing quantities: " + missing);
  }

  CountsTable t;
  t.s_alpha1 = cells[0];
  t.s_beta1 = cells[1];
  t.c11 = cells[2];
  t.c12 = cells[3];
  t.c21 = cells[4];
  t.c22 = cells[5];
  t.validate();
  return t;
}

CountsTable load_counts(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error("cannot read counts file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw parse_error("cannot read counts file: " + path.string());
  }
  return parse_counts(buffer.str());
}

std::string to_csv(const CountsTable& table) {
  const std::array<double, 6> cells = cells_in_order(table);
  std::string out{kHeader};
  out += '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out += kCountsQuantities[i];
    out += ',';
    out += shortest(cells[i]);
    out += '\n';
  }
  return out;
}

void write_counts_csv(const std::filesystem::path& path,
                      const CountsTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw parse_error("cannot write counts file: " + path.string());
  }
  out << to_csv(table);
  out.flush();
  if (!out) {
    throw parse_error("cannot write counts file: " + path.string());
  }
}

}  // namespace bell
