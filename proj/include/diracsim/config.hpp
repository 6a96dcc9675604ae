#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diracsim/grid.hpp"
#include "diracsim/params.hpp"

namespace diracsim {

/// Invalid or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical health failure during a run, e.g. a truncation leak
/// (CLI exit code 3).
class NumericalHealthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full experiment description.  Flat key-value text format with one
/// section per module:
///
///   [experiment]  name, engine
///   [physics]     eta, omega_tilde, Omega | lambda_c, omega_probe
///   [grid]        n_points, x_min, x_max
///   [time]        horizon, dt, snapshots
///   [measurement] shots, seed, probe_times, k_max, k_points
///   [fock]        n_trunc
///   [sweep]       lambdas
///   [output]      dir
///
/// Exactly one of Omega and lambda_c may be given; the other is derived.
/// A seed is mandatory whenever shots is finite (> 0).
struct ExperimentConfig {
    std::string name = "custom";      ///< fig1 | fig2 | fig3 | sweep | custom
    std::string engine = "spectral";  ///< spectral | fock | both

    double eta = 0.06;
    double omega_tilde = 0.0;  ///< default set in default_config
    std::optional<double> mass_term;
    std::optional<double> lambda_c;
    double omega_probe = 0.0;
    double p0 = 0.0;  ///< initial mean momentum of the custom experiment's packet

    int n_points = 4096;
    double x_min = -60.0, x_max = 60.0;

    double horizon = 250.0;
    double dt = 2.0;
    std::vector<double> snapshots = {0.0, 75.0, 150.0};

    long shots = 10000;  ///< 0 = noiseless
    std::optional<std::uint64_t> seed;
    std::vector<double> probe_times;  ///< default 1..14 us
    double k_max = 3.0;
    int k_points = 61;

    int n_trunc = 400;

    std::vector<double> sweep_lambdas = {5.4, 2.5, 1.2, 0.6};

    std::string out_dir = "out";
};

/// Baseline configuration for a named experiment.
ExperimentConfig default_config(const std::string& experiment);

/// Parses the key-value config format; unknown keys are rejected.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies one "section.key=value" override.
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

/// Consistency checks; throws ConfigError.
void validate(const ExperimentConfig& cfg);

/// Derived quantities (validates first).
DiracParams resolve_params(const ExperimentConfig& cfg);
Grid resolve_grid(const ExperimentConfig& cfg);
/// Output directory after applying the DIRACSIM_OUT_ROOT environment
/// variable to relative paths.
std::filesystem::path resolve_out_dir(const ExperimentConfig& cfg);

/// Serializes the fully resolved config (including derived values) in
/// the same format.
std::string config_echo(const ExperimentConfig& cfg);

}  // namespace diracsim
