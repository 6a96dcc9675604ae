#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "diracsim/config.hpp"

namespace diracsim {

struct ExperimentReport {
    std::filesystem::path out_dir;
    std::vector<std::string> files;  ///< artifact filenames, in write order
    nlohmann::json summary;          ///< key numbers, also written as report.json
};

/// Runs one configured experiment and writes its artifacts (CSV series,
/// SVG plots, resolved config echo, report.json) into the output
/// directory.  Deterministic under a fixed seed.  Throws ConfigError for
/// invalid configurations and NumericalHealthError when a numerical
/// guard (e.g. Fock truncation) trips.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Deterministic stream splitter for per-task seeds.
std::uint64_t seed_mix(std::uint64_t base, std::uint64_t salt);

}  // namespace diracsim
