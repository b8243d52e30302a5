#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bell/experiment.hpp"

namespace bell {

// Counts CSV schema: header line `quantity,value`, then the six rows
// S_A1, S_B1, C11, C12, C21, C22 in any order, each exactly once, LF line
// endings. Duplicate/unknown/missing quantities throw parse_error; negative
// or non-finite values throw validation_error.
CountsTable parse_counts(std::string_view text);

// Reads and parses a counts file; I/O failures throw parse_error.
CountsTable load_counts(const std::filesystem::path& path);

// Canonical CSV rendering (header + rows in canonical order). Values are
// written with shortest round-trip formatting, so parse_counts(to_csv(t))
// reproduces t exactly.
std::string to_csv(const CountsTable& table);

void write_counts_csv(const std::filesystem::path& path,
                      const CountsTable& table);

}  // namespace bell
