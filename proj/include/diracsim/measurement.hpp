#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diracsim/params.hpp"
#include "diracsim/spinor_field.hpp"

namespace diracsim {

/// Weighted set of normalized motional wavefunctions (position
/// representation) left after the internal state has been incoherently
/// recombined, plus the freshly prepared internal spinor.
struct MotionalEnsemble {
    struct Entry {
        double weight = 0.0;
        std::vector<cplx> wavefunction;
    };
    Grid grid;
    std::vector<Entry> entries;
    Vec2 internal;  ///< fresh internal spinor after recombination

    /// Same motional ensemble with a different freshly prepared spinor.
    MotionalEnsemble with_internal(Vec2 spinor) const;

    /// Mixed motional density sum_s w_s |psi_s(x)|^2.
    std::vector<double> marginal_density() const;
    double expect_x() const;
    double expect_x2() const;
};

/// Ideal recombination map: traces out the internal state, keeps the
/// motional branches with their populations and prepares the internal
/// state in |+>_y.  The transfer is modeled as lossless and recoil-free.
MotionalEnsemble recombine(const SpinorField& state);

/// <A(k)> with A(k) = cos(k x) sigma_z + sin(k x) sigma_y evaluated on
/// the ensemble; |k| must stay below the grid Nyquist momentum.
double expect_A(const MotionalEnsemble& ensemble, double k);

struct SampleResult {
    double estimate = 0.0;
    double stderr_est = 0.0;
};

/// Quantum-projection-noise model: binomial counts with success
/// probability (1 + true_value)/2, plug-in standard error
/// sqrt((1 - est^2)/shots).  Deterministic under a fixed seed.
SampleResult sample_A(double true_value, long shots, std::uint64_t seed);

/// Probe-time sweep of <A(k)>, k_i = 2*eta*omega_probe*t_i.
struct ProbeRecord {
    std::vector<double> times;      ///< [us]
    std::vector<double> ks;         ///< [1/Delta]
    std::vector<double> estimates;  ///< <A(k_i)> (exact or sampled)
    std::vector<double> stderrs;    ///< 0 when exact
    long shots = 0;                 ///< 0 = noiseless
};

struct ProbeSettings {
    std::vector<double> times;          ///< [us]
    std::optional<long> shots;          ///< absent = noiseless
    std::uint64_t seed = 0;
};

/// Probe times used in the experiments: 1..14 us in 1 us steps.
std::vector<double> default_probe_times();

struct MeasureResult {
    double x_estimate = 0.0;
    double stderr_est = 0.0;
    bool linear_regime_warning = false;  ///< k_max * <|x|> above 0.5 rad
    ProbeRecord record;
};

/// Short-probe-time slope estimate of <x>: recombines, evaluates
/// <A(k_i)> with the internal state in |+>_y, fits a weighted line
/// through the origin versus probe time and divides the slope by
/// 2*eta*omega_probe.  Needs at least 3 probe points.
MeasureResult measure_x(const SpinorField& state, const DiracParams& params,
                        const ProbeSettings& probe);

/// Characteristic-function tomography of |psi(x)|^2: assembles
/// F(k) = <cos kx> + i <sin kx> from the sigma_z / sigma_y internal
/// preparations, inverts with a rectangular window on the state's grid,
/// clips small negative values and renormalizes to unit mass.
/// The k grid must be symmetric around (and include) 0 and stay below
/// the Nyquist momentum.  A reconstruction dipping below -0.05 throws.
std::vector<double> reconstruct_density(const SpinorField& state,
                                        const std::vector<double>& k_grid,
                                        std::optional<long> shots = std::nullopt,
                                        std::uint64_t seed = 0);

/// Evenly spaced symmetric k grid with n_points (odd) up to +-k_max.
std::vector<double> make_k_grid(double k_max, int n_points);

struct ConditionalDensity {
    double weight = 0.0;
    std::vector<double> density;
};

/// Motional density conditioned on the internal level (0 = upper,
/// 1 = lower); level 1 is measured through the modeled pi-pulse swap.
ConditionalDensity spinor_resolved_density(const SpinorField& state, int component);

}  // namespace diracsim
