#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace diracsim {

/// Numeric table with a single header row.  Values are written with 17
/// significant digits so that every double survives a write/read
/// round-trip bit-exactly.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Writes via a temporary file and rename.
void write_csv_atomic(const std::filesystem::path& path, const CsvTable& table);

CsvTable read_csv(const std::filesystem::path& path);

/// Writes arbitrary text atomically (config echoes, reports, plots).
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace diracsim
