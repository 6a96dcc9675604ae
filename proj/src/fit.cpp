#include "diracsim/fit.hpp"

#include <cmath>

#include "diracsim/fock.hpp"
#include "diracsim/propagator.hpp"
#include "diracsim/state_prep.hpp"

namespace diracsim {

namespace {

struct Design {
    Eigen::VectorXd t, x, w;  // w = 1/sigma
};

double cost_of(const Design& d, double a, double R, double om) {
    double c = 0.0;
    for (int i = 0; i < d.t.size(); ++i) {
        const double r = d.w[i] * (a * d.t[i] + R * std::sin(om * d.t[i]) - d.x[i]);
        c += r * r;
    }
    return c;
}

// Straight-line LS fit x ~ a*t (weighted), for seeding and the
// degenerate branch.
double line_slope(const Design& d) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < d.t.size(); ++i) {
        num += d.w[i] * d.w[i] * d.t[i] * d.x[i];
        den += d.w[i] * d.w[i] * d.t[i] * d.t[i];
    }
    return den > 0.0 ? num / den : 0.0;
}

// For a fixed frequency, (a, R) is a linear problem; used by the coarse
// frequency search.
double linear_cost_at(const Design& d, double om, double* a_out, double* R_out) {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    Eigen::Vector2d b = Eigen::Vector2d::Zero();
    for (int i = 0; i < d.t.size(); ++i) {
        const double w2 = d.w[i] * d.w[i];
        const double s = std::sin(om * d.t[i]);
        m(0, 0) += w2 * d.t[i] * d.t[i];
        m(0, 1) += w2 * d.t[i] * s;
        m(1, 1) += w2 * s * s;
        b(0) += w2 * d.t[i] * d.x[i];
        b(1) += w2 * s * d.x[i];
    }
    m(1, 0) = m(0, 1);
    const Eigen::Vector2d sol = m.ldlt().solve(b);
    if (a_out) *a_out = sol(0);
    if (R_out) *R_out = sol(1);
    return cost_of(d, sol(0), sol(1), om);
}

struct LmResult {
    double a, R, om, cost;
    int iterations;
    bool converged;
};

LmResult levenberg_marquardt(const Design& d, double a, double R, double om) {
    double lambda = 1e-3;
    double cost = cost_of(d, a, R, om);
    const int max_iter = 200;
    int it = 0;
    for (; it < max_iter; ++it) {
        Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
        Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
        for (int i = 0; i < d.t.size(); ++i) {
            const double s = std::sin(om * d.t[i]);
            const double c = std::cos(om * d.t[i]);
            Eigen::Vector3d j(d.w[i] * d.t[i], d.w[i] * s, d.w[i] * R * d.t[i] * c);
            const double r = d.w[i] * (a * d.t[i] + R * s - d.x[i]);
            jtj += j * j.transpose();
            jtr += j * r;
        }
        bool stepped = false;
        for (int k = 0; k < 12; ++k) {
            Eigen::Matrix3d m = jtj;
            for (int q = 0; q < 3; ++q) m(q, q) += lambda * std::max(jtj(q, q), 1e-30);
            const Eigen::Vector3d delta = m.ldlt().solve(-jtr);
            const double a2 = a + delta(0), R2 = R + delta(1), om2 = om + delta(2);
            const double c2 = cost_of(d, a2, R2, om2);
            if (c2 <= cost) {
                const double drop = cost - c2;
                a = a2;
                R = R2;
                om = om2;
                cost = c2;
                lambda = std::max(lambda / 3.0, 1e-12);
                stepped = true;
                if (drop <= 1e-14 * std::max(cost, 1e-30) && delta.norm() < 1e-10)
                    return {a, R, om, cost, it, true};
                break;
            }
            lambda *= 10.0;
        }
        if (!stepped) return {a, R, om, cost, it, true};  // no descent direction left
    }
    return {a, R, om, cost, it, false};
}

}  // namespace

std::vector<double> time_samples(double horizon, double dt) {
    std::vector<double> t;
    for (double v = 0.0; v <= horizon + 1e-9; v += dt) t.push_back(v);
    return t;
}

ZbFit fit_zb(const std::vector<double>& times, const std::vector<double>& xs,
             const std::vector<double>& sigmas, double omega_seed) {
    const std::size_t n = times.size();
    if (n < 8 || xs.size() != n)
        throw std::invalid_argument("fit_zb: need >= 8 samples with matching lengths");
    if (!sigmas.empty() && sigmas.size() != n)
        throw std::invalid_argument("fit_zb: sigmas length mismatch");
    if (!(omega_seed > 0.0)) throw std::invalid_argument("fit_zb: omega_seed must be positive");

    Design d;
    d.t.resize(n);
    d.x.resize(n);
    d.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.t[i] = times[i];
        d.x[i] = xs[i];
        d.w[i] = sigmas.empty() ? 1.0 : 1.0 / std::max(sigmas[i], 1e-300);
    }

    ZbFit fit;
    const double span = d.t.maxCoeff() - d.t.minCoeff();
    fit.span_warning = span * omega_seed < 1.5 * 2.0 * M_PI;

    // seeds: slope from a line fit, amplitude from the detrended range
    const double a0 = line_slope(d);
    double lo = 0.0, hi = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = d.x[i] - a0 * d.t[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        scale = std::max(scale, std::abs(d.x[i]));
    }
    const double R0 = 0.5 * (hi - lo);

    if (R0 < 1e-9 * std::max(scale, 1.0)) {
        // oscillation-free data: report the line fit with R pinned to 0
        fit.degenerate = true;
        fit.drift = a0;
        fit.amplitude = 0.0;
        fit.frequency = omega_seed;
        double swt2 = 0.0, rss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            swt2 += d.w[i] * d.w[i] * d.t[i] * d.t[i];
            const double r = d.w[i] * (a0 * d.t[i] - d.x[i]);
            rss += r * r;
        }
        fit.residual_norm = std::sqrt(rss);
        const double s2 = sigmas.empty() ? rss / std::max<double>(n - 1, 1) : 1.0;
        fit.covariance(0, 0) = s2 / swt2;
        return fit;
    }

    LmResult best = levenberg_marquardt(d, a0, R0, omega_seed);
    if (!best.converged || best.cost > 10.0 * linear_cost_at(d, omega_seed, nullptr, nullptr)) {
        // coarse frequency search over [seed/2, 2*seed], then refine
        for (double f = 0.5; f <= 2.001; f += 0.125) {
            double ag, Rg;
            linear_cost_at(d, f * omega_seed, &ag, &Rg);
            const LmResult r = levenberg_marquardt(d, ag, Rg, f * omega_seed);
            if (r.converged && (!best.converged || r.cost < best.cost)) best = r;
        }
    }
    if (!best.converged)
        throw FitError("fit_zb: Levenberg-Marquardt did not converge", std::sqrt(best.cost));

    // canonical signs: amplitude >= 0, frequency >= 0
    double a = best.a, R = best.R, om = best.om;
    if (om < 0.0) {
        om = -om;
        R = -R;
    }
    if (R < 0.0) R = -R;

    fit.drift = a;
    fit.amplitude = R;
    fit.frequency = om;
    fit.iterations = best.iterations;
    fit.residual_norm = std::sqrt(best.cost);

    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::sin(om * d.t[i]);
        const double c = std::cos(om * d.t[i]);
        Eigen::Vector3d j(d.w[i] * d.t[i], d.w[i] * s, d.w[i] * R * d.t[i] * c);
        jtj += j * j.transpose();
    }
    Eigen::Matrix3d cov = jtj.inverse();
    if (sigmas.empty()) cov *= best.cost / std::max<double>(n - 3, 1);
    fit.covariance = cov;
    return fit;
}

std::vector<SweepRow> zb_sweep(const SweepConfig& cfg) {
    if (cfg.mass_terms.empty()) throw std::invalid_argument("zb_sweep: empty mass list");
    if (!(cfg.omega_tilde > 0.0)) throw std::invalid_argument("zb_sweep: omega_tilde unset");

    const std::vector<double> times = time_samples(cfg.horizon, cfg.dt);
    std::vector<SweepRow> rows(cfg.mass_terms.size());

    const long n = static_cast<long>(cfg.mass_terms.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        SweepRow& row = rows[i];
        row.mass_term = cfg.mass_terms[i];
        row.mass_ratio = cfg.mass_terms[i] / (cfg.eta * cfg.omega_tilde);
        try {
            const DiracParams params =
                params_from_lab(cfg.eta, cfg.omega_tilde, cfg.mass_terms[i], cfg.omega_probe);
            const SpinorField s0 =
                gaussian_spinor(cfg.spinor, cfg.x0, cfg.p0, cfg.width, cfg.grid);
            std::vector<double> xs;
            switch (cfg.engine) {
                case Engine::spectral: xs = position_series(s0, params, times); break;
                case Engine::heisenberg: xs = heisenberg_series(s0, params, times); break;
                case Engine::fock: {
                    const IonHamiltonian h = build_hamiltonian(cfg.fock_n_trunc, params);
                    FockState f = initial_fock_state(cfg.spinor, Motional::ground(),
                                                     cfg.fock_n_trunc);
                    if (cfg.p0 != 0.0 || cfg.x0 != 0.0)
                        throw std::invalid_argument(
                            "zb_sweep: fock engine supports the ground-state packet only");
                    xs.resize(times.size());
                    for (std::size_t k = 0; k < times.size(); ++k)
                        xs[k] = fock_observables(evolve_fock(f, times[k], h)).x;
                    break;
                }
            }
            const double seed = row.mass_term > 0.0 ? 2.0 * row.mass_term
                                                    : 2.0 * M_PI / cfg.horizon;
            const ZbFit fit = fit_zb(times, xs, {}, seed);
            row.drift = fit.drift;
            row.amplitude = fit.amplitude;
            row.frequency = fit.frequency;
            row.drift_err = std::sqrt(std::max(0.0, fit.covariance(0, 0)));
            row.amplitude_err = std::sqrt(std::max(0.0, fit.covariance(1, 1)));
            row.frequency_err = std::sqrt(std::max(0.0, fit.covariance(2, 2)));
            row.ok = true;
            if (fit.degenerate) row.message = "degenerate (no oscillation)";
        } catch (const std::exception& e) {
            row.ok = false;
            row.message = e.what();
        }
    }
    return rows;
}

}  // namespace diracsim
