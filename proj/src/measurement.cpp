#include "diracsim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "diracsim/kernels.hpp"
#include "diracsim/propagator.hpp"
#include "diracsim/state_prep.hpp"

namespace diracsim {

MotionalEnsemble MotionalEnsemble::with_internal(Vec2 spinor) const {
    MotionalEnsemble e = *this;
    const double n = std::sqrt(std::norm(spinor.u) + std::norm(spinor.l));
    e.internal = {spinor.u / n, spinor.l / n};
    return e;
}

std::vector<double> MotionalEnsemble::marginal_density() const {
    std::vector<double> rho(grid.size(), 0.0);
    for (const Entry& en : entries)
        for (int j = 0; j < grid.size(); ++j) rho[j] += en.weight * std::norm(en.wavefunction[j]);
    return rho;
}

double MotionalEnsemble::expect_x() const {
    const std::vector<double> rho = marginal_density();
    double s = 0.0;
    for (int j = 0; j < grid.size(); ++j) s += grid.x(j) * rho[j];
    return s * grid.dx();
}

double MotionalEnsemble::expect_x2() const {
    const std::vector<double> rho = marginal_density();
    double s = 0.0;
    for (int j = 0; j < grid.size(); ++j) s += grid.x(j) * grid.x(j) * rho[j];
    return s * grid.dx();
}

MotionalEnsemble recombine(const SpinorField& state) {
    require_normalized(state);
    const SpinorField pos = to_representation(state, Rep::position);

    MotionalEnsemble ens;
    ens.grid = pos.grid;
    ens.internal = {cplx{1.0, 0.0} / std::sqrt(2.0), cplx{0.0, 1.0} / std::sqrt(2.0)};  // |+>_y

    const double dx = pos.grid.dx();
    for (const auto* comp : {&pos.upper, &pos.lower}) {
        double w = 0.0;
        for (const cplx& v : *comp) w += std::norm(v);
        w *= dx;
        if (w < 1e-12) continue;  // empty branch
        MotionalEnsemble::Entry en;
        en.weight = w;
        en.wavefunction.resize(comp->size());
        const double s = 1.0 / std::sqrt(w);
        for (std::size_t j = 0; j < comp->size(); ++j) en.wavefunction[j] = (*comp)[j] * s;
        ens.entries.push_back(std::move(en));
    }
    return ens;
}

double expect_A(const MotionalEnsemble& ensemble, double k) {
    if (std::abs(k) > ensemble.grid.p_nyquist())
        throw std::invalid_argument("expect_A: k beyond the grid Nyquist momentum");

    const std::vector<double> rho = ensemble.marginal_density();
    const std::vector<double> xs = ensemble.grid.x_points();
    double cs = 0.0, sn = 0.0;
    kernels::char_function(rho, xs, ensemble.grid.dx(), std::span<const double>{&k, 1},
                           std::span<double>{&cs, 1}, std::span<double>{&sn, 1});

    const Vec2& chi = ensemble.internal;
    const double sz = std::norm(chi.u) - std::norm(chi.l);
    const double sy = 2.0 * (std::conj(chi.u) * chi.l).imag();
    return sz * cs + sy * sn;
}

SampleResult sample_A(double true_value, long shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample_A: shots must be >= 1");
    if (true_value < -1.0 || true_value > 1.0)
        throw std::invalid_argument("sample_A: true_value outside [-1, 1]");

    const double prob = 0.5 * (1.0 + true_value);
    long counts;
    if (prob <= 0.0) {
        counts = 0;
    } else if (prob >= 1.0) {
        counts = shots;
    } else {
        std::mt19937_64 rng(seed);
        counts = std::binomial_distribution<long>(shots, prob)(rng);
    }
    const double est = 2.0 * static_cast<double>(counts) / shots - 1.0;
    const double se = std::sqrt(std::max(0.0, 1.0 - est * est) / shots);
    return {est, se};
}

std::vector<double> default_probe_times() {
    std::vector<double> t(14);
    for (int i = 0; i < 14; ++i) t[i] = i + 1.0;
    return t;
}

MeasureResult measure_x(const SpinorField& state, const DiracParams& params,
                        const ProbeSettings& probe) {
    if (probe.times.size() < 3)
        throw std::invalid_argument("measure_x: need at least 3 probe points");
    if (probe.shots && *probe.shots < 1)
        throw std::invalid_argument("measure_x: shots must be >= 1");

    const double k_per_t = 2.0 * params.eta * params.omega_probe;
    const MotionalEnsemble ens = recombine(state);
    const std::vector<double> rho = ens.marginal_density();
    const std::vector<double> xs = ens.grid.x_points();

    MeasureResult res;
    res.record.times = probe.times;
    res.record.shots = probe.shots.value_or(0);
    const std::size_t np = probe.times.size();
    res.record.ks.resize(np);
    for (std::size_t i = 0; i < np; ++i) res.record.ks[i] = k_per_t * probe.times[i];

    // mean |x|, for the linear-regime check
    double mean_abs_x = 0.0;
    for (int j = 0; j < ens.grid.size(); ++j) mean_abs_x += std::abs(ens.grid.x(j)) * rho[j];
    mean_abs_x *= ens.grid.dx();
    const double k_max = *std::max_element(res.record.ks.begin(), res.record.ks.end());
    res.linear_regime_warning = k_max * mean_abs_x > 0.5;

    // exact <A(k_i)> with the fresh internal state |+>_y: <sin(k x)>
    std::vector<double> cs(np), sn(np);
    kernels::char_function(rho, xs, ens.grid.dx(), res.record.ks, cs, sn);

    res.record.estimates.resize(np);
    res.record.stderrs.assign(np, 0.0);
    std::mt19937_64 rng(probe.seed);
    for (std::size_t i = 0; i < np; ++i) {
        if (probe.shots) {
            const double prob_up = 0.5 * (1.0 + sn[i]);
            long counts;
            if (prob_up <= 0.0)
                counts = 0;
            else if (prob_up >= 1.0)
                counts = *probe.shots;
            else
                counts = std::binomial_distribution<long>(*probe.shots, prob_up)(rng);
            const double est = 2.0 * static_cast<double>(counts) / *probe.shots - 1.0;
            res.record.estimates[i] = est;
            res.record.stderrs[i] =
                std::sqrt(std::max(0.0, 1.0 - est * est) / static_cast<double>(*probe.shots));
        } else {
            res.record.estimates[i] = sn[i];
        }
    }

    // weighted least squares through the origin: A = slope * t
    double swt2 = 0.0, swta = 0.0;
    for (std::size_t i = 0; i < np; ++i) {
        double w = 1.0;
        if (probe.shots) {
            double s2 = res.record.stderrs[i] * res.record.stderrs[i];
            s2 = std::max(s2, 0.25 / (static_cast<double>(*probe.shots) *
                                      static_cast<double>(*probe.shots)));
            w = 1.0 / s2;
        }
        swt2 += w * probe.times[i] * probe.times[i];
        swta += w * probe.times[i] * res.record.estimates[i];
    }
    const double slope = swta / swt2;
    res.x_estimate = slope / k_per_t;

    if (probe.shots) {
        res.stderr_est = std::sqrt(1.0 / swt2) / k_per_t;
    } else {
        double rss = 0.0;
        for (std::size_t i = 0; i < np; ++i) {
            const double r = res.record.estimates[i] - slope * probe.times[i];
            rss += r * r;
        }
        res.stderr_est = std::sqrt(rss / (np - 1.0) / swt2) / k_per_t;
    }
    return res;
}

std::vector<double> make_k_grid(double k_max, int n_points) {
    if (n_points < 3 || n_points % 2 == 0)
        throw std::invalid_argument("make_k_grid: n_points must be odd and >= 3");
    std::vector<double> ks(n_points);
    const double dk = 2.0 * k_max / (n_points - 1);
    for (int i = 0; i < n_points; ++i) ks[i] = -k_max + i * dk;
    ks[(n_points - 1) / 2] = 0.0;
    return ks;
}

std::vector<double> reconstruct_density(const SpinorField& state,
                                        const std::vector<double>& k_grid,
                                        std::optional<long> shots, std::uint64_t seed) {
    if (k_grid.size() < 3) throw std::invalid_argument("reconstruct_density: k_grid too small");
    const std::size_t nk = k_grid.size();
    double k_max = 0.0;
    bool has_zero = false;
    for (std::size_t i = 0; i < nk; ++i) {
        k_max = std::max(k_max, std::abs(k_grid[i]));
        if (k_grid[i] == 0.0) has_zero = true;
        // symmetric grid: the mirrored value must be present
        if (std::abs(k_grid[i] + k_grid[nk - 1 - i]) > 1e-12)
            throw std::invalid_argument("reconstruct_density: k_grid must be symmetric");
    }
    if (!has_zero) throw std::invalid_argument("reconstruct_density: k_grid must include 0");
    if (k_max >= state.grid.p_nyquist())
        throw std::invalid_argument("reconstruct_density: k_max beyond the Nyquist momentum");

    const MotionalEnsemble ens = recombine(state);
    const std::vector<double> rho = ens.marginal_density();
    const std::vector<double> xs = ens.grid.x_points();

    std::vector<double> cs(nk), sn(nk);
    kernels::char_function(rho, xs, ens.grid.dx(), k_grid, cs, sn);

    std::mt19937_64 rng(seed);
    auto sample = [&](double value, long n) {
        const double prob = std::clamp(0.5 * (1.0 + value), 0.0, 1.0);
        long counts;
        if (prob <= 0.0)
            counts = 0;
        else if (prob >= 1.0)
            counts = n;
        else
            counts = std::binomial_distribution<long>(n, prob)(rng);
        return 2.0 * static_cast<double>(counts) / n - 1.0;
    };
    std::vector<cplx> F(nk);
    for (std::size_t i = 0; i < nk; ++i) {
        double c = cs[i], s = sn[i];
        if (shots) {
            c = sample(c, *shots);  // sigma_z preparation
            s = sample(s, *shots);  // sigma_y preparation
        }
        F[i] = {c, s};
    }

    const double dk = (nk > 1) ? (k_grid.back() - k_grid.front()) / (nk - 1) : 0.0;
    std::vector<double> rec(xs.size());
    kernels::fourier_inversion(F, k_grid, dk, xs, rec);

    const double lo = *std::min_element(rec.begin(), rec.end());
    if (lo < -0.05)
        throw std::runtime_error("reconstruct_density: strongly negative reconstruction");
    double mass = 0.0;
    for (double& v : rec) {
        if (v < 0.0) v = 0.0;
        mass += v;
    }
    mass *= state.grid.dx();
    if (mass <= 0.0) throw std::runtime_error("reconstruct_density: vanishing reconstruction");
    for (double& v : rec) v /= mass;
    return rec;
}

ConditionalDensity spinor_resolved_density(const SpinorField& state, int component) {
    if (component != 0 && component != 1)
        throw std::invalid_argument("spinor_resolved_density: component must be 0 or 1");
    require_normalized(state);

    // level 1 is read out after a pi-pulse population swap
    SpinorField pos = to_representation(state, Rep::position);
    if (component == 1) pos = carrier_rotation(pos, M_PI, 0.0);

    ConditionalDensity out;
    out.density.assign(pos.grid.size(), 0.0);
    double w = 0.0;
    for (int j = 0; j < pos.grid.size(); ++j) {
        out.density[j] = std::norm(pos.upper[j]);
        w += out.density[j];
    }
    w *= pos.grid.dx();
    out.weight = w;
    if (w < 1e-12) {
        std::fill(out.density.begin(), out.density.end(), 0.0);
        out.weight = 0.0;
        return out;
    }
    for (double& v : out.density) v /= w;
    return out;
}

}  // namespace diracsim
