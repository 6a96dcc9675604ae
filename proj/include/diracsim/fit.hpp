#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "diracsim/params.hpp"
#include "diracsim/spinor_field.hpp"

namespace diracsim {

/// Weighted nonlinear least-squares fit of <x(t)> = a t + R sin(w t).
/// The model has exactly three parameters; no phase offset is fitted.
struct ZbFit {
    double drift = 0.0;      ///< a [Delta/us]
    double amplitude = 0.0;  ///< R >= 0 [Delta]
    double frequency = 0.0;  ///< w >= 0 [rad/us]
    double phase = 0.0;      ///< pinned at zero (three-parameter model)
    Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();  ///< order (a, R, w)
    double residual_norm = 0.0;  ///< sqrt(sum of squared weighted residuals)
    bool degenerate = false;     ///< oscillation-free data, R forced to 0
    bool span_warning = false;   ///< samples span < 1.5 periods of the seed
    int iterations = 0;
};

class FitError : public std::runtime_error {
public:
    FitError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual(best_residual) {}
    double best_residual;
};

/// Levenberg-Marquardt fit.  sigmas may be empty (uniform weights; the
/// covariance is then scaled by the residual variance).  Seeds: a from a
/// straight-line fit, R from the detrended range, frequency from
/// omega_seed, with a coarse frequency grid search as fallback.
/// Throws FitError on non-convergence; needs >= 8 samples.
ZbFit fit_zb(const std::vector<double>& times, const std::vector<double>& xs,
             const std::vector<double>& sigmas, double omega_seed);

enum class Engine { spectral, fock, heisenberg };

struct SweepRow {
    double mass_ratio = 0.0;  ///< Omega / (eta * omega_tilde)
    double mass_term = 0.0;   ///< Omega [rad/us]
    double drift = 0.0, amplitude = 0.0, frequency = 0.0;
    double drift_err = 0.0, amplitude_err = 0.0, frequency_err = 0.0;
    bool ok = false;
    std::string message;
};

struct SweepConfig {
    std::vector<double> mass_terms;       ///< Omega values, one row each
    Vec2 spinor{1.0, 1.0};                ///< initial internal state
    double x0 = 0.0, p0 = 0.0, width = 1.0;
    double horizon = 250.0;               ///< [us]
    double dt = 1.0;                      ///< curve sampling [us]
    Engine engine = Engine::spectral;
    int fock_n_trunc = 400;
    double eta = 0.06;
    double omega_tilde = 0.0;             ///< must be set
    double omega_probe = 0.0;
    Grid grid;
};

/// Evolution + fit per mass; rows ordered as mass_terms.  Per-row fit
/// failures are reported in the row, the sweep continues.
std::vector<SweepRow> zb_sweep(const SweepConfig& cfg);

/// Helper: evenly spaced times 0, dt, ..., <= horizon.
std::vector<double> time_samples(double horizon, double dt);

}  // namespace diracsim
