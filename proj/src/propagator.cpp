#include "diracsim/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "diracsim/fft.hpp"
#include "diracsim/kernels.hpp"

namespace diracsim {

namespace {

// Phase factors exp(-i p_k x_min) linking the FFT index convention to
// the physical momentum grid.
void apply_xmin_phase(std::vector<cplx>& v, const Grid& g, int sign) {
    for (int k = 0; k < g.size(); ++k)
        v[k] *= std::polar(1.0, sign * g.p(k) * g.x_min());
}

std::vector<cplx> forward_component(const std::vector<cplx>& in, const Grid& g) {
    std::vector<cplx> v = in;
    fft_radix2(v, -1);
    apply_xmin_phase(v, g, -1);
    const double s = g.dx() / std::sqrt(2.0 * M_PI);
    for (auto& z : v) z *= s;
    return v;
}

std::vector<cplx> backward_component(const std::vector<cplx>& in, const Grid& g) {
    std::vector<cplx> v = in;
    apply_xmin_phase(v, g, +1);
    fft_radix2(v, +1);
    const double s = g.dp() / std::sqrt(2.0 * M_PI);
    for (auto& z : v) z *= s;
    return v;
}

}  // namespace

DiracMode dirac_mode(double p, const DiracParams& params) {
    DiracMode m;
    m.p = p;
    m.energy = std::hypot(params.c * p, params.mass_term);
    m.h = Mat2{params.mass_term, params.c * p, params.c * p, -params.mass_term};
    return m;
}

SpinorField to_momentum(const SpinorField& state) {
    if (state.rep != Rep::position)
        throw std::invalid_argument("to_momentum: state already in momentum representation");
    SpinorField out;
    out.grid = state.grid;
    out.rep = Rep::momentum;
    out.upper = forward_component(state.upper, state.grid);
    out.lower = forward_component(state.lower, state.grid);
    return out;
}

SpinorField to_position(const SpinorField& state) {
    if (state.rep != Rep::momentum)
        throw std::invalid_argument("to_position: state already in position representation");
    SpinorField out;
    out.grid = state.grid;
    out.rep = Rep::position;
    out.upper = backward_component(state.upper, state.grid);
    out.lower = backward_component(state.lower, state.grid);
    return out;
}

SpinorField to_representation(const SpinorField& state, Rep rep) {
    if (state.rep == rep) return state;
    return rep == Rep::momentum ? to_momentum(state) : to_position(state);
}

SpinorField evolve(const SpinorField& state, double t, const DiracParams& params) {
    SpinorField mom = to_representation(state, Rep::momentum);
    const std::vector<double> ps = mom.grid.p_points();
    kernels::evolve_modes(mom.upper, mom.lower, ps, params.c, params.mass_term, t);
    return to_representation(mom, state.rep);
}

double expect_x(const SpinorField& state) {
    const SpinorField pos = to_representation(state, Rep::position);
    require_normalized(pos);
    double s = 0.0;
    for (int j = 0; j < pos.grid.size(); ++j)
        s += pos.grid.x(j) * (std::norm(pos.upper[j]) + std::norm(pos.lower[j]));
    return s * pos.grid.dx();
}

double expect_p(const SpinorField& state) {
    const SpinorField mom = to_representation(state, Rep::momentum);
    require_normalized(mom);
    double s = 0.0;
    for (int j = 0; j < mom.grid.size(); ++j)
        s += mom.grid.p(j) * (std::norm(mom.upper[j]) + std::norm(mom.lower[j]));
    return s * mom.grid.dp();
}

double expect_pauli(const SpinorField& state, PauliAxis axis) {
    require_normalized(state);
    double s = 0.0;
    for (std::size_t j = 0; j < state.upper.size(); ++j) {
        const cplx ul = std::conj(state.upper[j]) * state.lower[j];
        switch (axis) {
            case PauliAxis::x: s += 2.0 * ul.real(); break;
            case PauliAxis::y: s += 2.0 * ul.imag(); break;
            case PauliAxis::z: s += std::norm(state.upper[j]) - std::norm(state.lower[j]); break;
        }
    }
    return s * state.measure();
}

double expect_energy(const SpinorField& state, const DiracParams& params) {
    const SpinorField mom = to_representation(state, Rep::momentum);
    require_normalized(mom);
    double s = 0.0;
    for (int j = 0; j < mom.grid.size(); ++j) {
        const double cp = params.c * mom.grid.p(j);
        const cplx ul = std::conj(mom.upper[j]) * mom.lower[j];
        s += cp * 2.0 * ul.real() +
             params.mass_term * (std::norm(mom.upper[j]) - std::norm(mom.lower[j]));
    }
    return s * mom.grid.dp();
}

std::vector<double> density_x(const SpinorField& state) {
    const SpinorField pos = to_representation(state, Rep::position);
    require_normalized(pos);
    std::vector<double> rho(pos.grid.size());
    for (int j = 0; j < pos.grid.size(); ++j)
        rho[j] = std::norm(pos.upper[j]) + std::norm(pos.lower[j]);
    return rho;
}

std::vector<double> density_p(const SpinorField& state) {
    const SpinorField mom = to_representation(state, Rep::momentum);
    require_normalized(mom);
    std::vector<double> rho(mom.grid.size());
    for (int j = 0; j < mom.grid.size(); ++j)
        rho[j] = std::norm(mom.upper[j]) + std::norm(mom.lower[j]);
    return rho;
}

double heisenberg_x(const SpinorField& state0, double t, const DiracParams& params) {
    if (state0.rep != Rep::momentum)
        throw std::invalid_argument("heisenberg_x: state0 must be in momentum representation");
    if (params.mass_term == 0.0) {
        const double w0 = std::norm(state0.upper[0]) + std::norm(state0.lower[0]);
        if (w0 > 1e-30)
            throw std::domain_error(
                "heisenberg_x: massless particle with weight at the p = 0 mode");
    }
    const double x0 = expect_x(state0);
    const std::vector<double> ps = state0.grid.p_points();
    return x0 + kernels::heisenberg_terms(state0.upper, state0.lower, ps, params.c,
                                          params.mass_term, t, state0.grid.dp());
}

std::vector<double> position_series(const SpinorField& state0, const DiracParams& params,
                                    const std::vector<double>& times) {
    const SpinorField mom = to_representation(state0, Rep::momentum);
    const std::vector<double> ps = mom.grid.p_points();
    std::vector<double> xs(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        SpinorField s = mom;
        kernels::evolve_modes(s.upper, s.lower, ps, params.c, params.mass_term, times[i]);
        xs[i] = expect_x(s);
    }
    return xs;
}

std::vector<double> heisenberg_series(const SpinorField& state0, const DiracParams& params,
                                      const std::vector<double>& times) {
    const SpinorField mom = to_representation(state0, Rep::momentum);
    std::vector<double> xs(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) xs[i] = heisenberg_x(mom, times[i], params);
    return xs;
}

}  // namespace diracsim
