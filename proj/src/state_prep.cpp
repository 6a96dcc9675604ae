#include "diracsim/state_prep.hpp"

#include <cmath>
#include <stdexcept>

namespace diracsim {

namespace {

SpinorField apply_spinor_matrix(const SpinorField& state, const Mat2& m) {
    SpinorField out = state;
    for (std::size_t j = 0; j < out.upper.size(); ++j) {
        const Vec2 v = m.apply({state.upper[j], state.lower[j]});
        out.upper[j] = v.u;
        out.lower[j] = v.l;
    }
    return out;
}

// Mass carried by the outermost momentum modes; nonzero means the state
// wrapped around the momentum grid.
double momentum_edge_mass(const SpinorField& mom) {
    const int n = mom.grid.size();
    double s = 0.0;
    for (int j : {n / 2 - 1, n / 2, n / 2 + 1})
        s += std::norm(mom.upper[j]) + std::norm(mom.lower[j]);
    return s * mom.grid.dp();
}

}  // namespace

SpinorField gaussian_spinor(Vec2 spinor, double x0, double p0, double width, const Grid& grid) {
    const double sn = std::sqrt(std::norm(spinor.u) + std::norm(spinor.l));
    if (!(sn > 0.0)) throw std::invalid_argument("gaussian_spinor: zero spinor");
    if (!(width > 2.0 * grid.dx()))
        throw std::invalid_argument("gaussian_spinor: width must exceed 2*dx");
    if (x0 + 6.0 * width >= grid.x_max() || x0 - 6.0 * width <= grid.x_min())
        throw std::invalid_argument("gaussian_spinor: packet does not fit the grid");
    spinor.u /= sn;
    spinor.l /= sn;

    SpinorField f = make_field(grid, Rep::position);
    const double amp = std::pow(2.0 * M_PI * width * width, -0.25);
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        const double g = amp * std::exp(-(x - x0) * (x - x0) / (4.0 * width * width));
        const cplx ph = std::polar(g, p0 * x);
        f.upper[j] = spinor.u * ph;
        f.lower[j] = spinor.l * ph;
    }
    const double nrm = f.norm();
    if (std::abs(nrm - 1.0) > 1e-10)
        throw std::invalid_argument("gaussian_spinor: packet clipped by grid edges");
    f.scale(1.0 / std::sqrt(nrm));
    return f;
}

SpinorField carrier_rotation(const SpinorField& state, double theta, double axis_phi) {
    require_normalized(state);
    return apply_spinor_matrix(state,
                               axis_rotation(theta, std::cos(axis_phi), std::sin(axis_phi), 0.0));
}

SpinorField lightshift_rotation(const SpinorField& state, double theta) {
    require_normalized(state);
    return apply_spinor_matrix(state, axis_rotation(theta, 0.0, 0.0, 1.0));
}

SpinorField displace_momentum(const SpinorField& state, double kappa, PauliAxis axis) {
    require_normalized(state);
    if (axis == PauliAxis::z)
        throw std::invalid_argument("displace_momentum: axis must be x or y");

    SpinorField pos = to_representation(state, Rep::position);
    for (int j = 0; j < pos.grid.size(); ++j) {
        const double a = kappa * pos.grid.x(j);
        const double ca = std::cos(a), sa = std::sin(a);
        const cplx u = pos.upper[j], l = pos.lower[j];
        if (axis == PauliAxis::x) {
            pos.upper[j] = ca * u - cplx{0.0, sa} * l;
            pos.lower[j] = ca * l - cplx{0.0, sa} * u;
        } else {
            pos.upper[j] = ca * u - sa * l;
            pos.lower[j] = sa * u + ca * l;
        }
    }
    const SpinorField mom = to_momentum(pos);
    if (momentum_edge_mass(mom) > 1e-12)
        throw std::invalid_argument("displace_momentum: momentum support clipped by the grid");
    return to_representation(mom, state.rep);
}

Mat2 energy_projector(EnergySign sign, double p, const DiracParams& params) {
    const DiracMode m = dirac_mode(p, params);
    if (m.energy == 0.0)
        throw std::domain_error("energy_projector: E(p) = 0, projector undefined");
    const double s = (sign == EnergySign::plus) ? 1.0 : -1.0;
    const cplx f = s / m.energy;
    Mat2 pm = 0.5 * cplx{1.0, 0.0} * Mat2::identity() + 0.5 * f * m.h;
    return pm;
}

ProjectionResult project_energy(const SpinorField& state, EnergySign sign,
                                const DiracParams& params) {
    require_normalized(state);
    SpinorField mom = to_representation(state, Rep::momentum);

    for (int j = 0; j < mom.grid.size(); ++j) {
        const double p = mom.grid.p(j);
        if (params.mass_term == 0.0 && p == 0.0) {
            // singular mode; only legal when unoccupied
            if (std::norm(mom.upper[j]) + std::norm(mom.lower[j]) > 1e-30)
                throw std::domain_error("project_energy: massless state occupies the p = 0 mode");
            mom.upper[j] = mom.lower[j] = 0.0;
            continue;
        }
        const Mat2 pm = energy_projector(sign, p, params);
        const Vec2 v = pm.apply({mom.upper[j], mom.lower[j]});
        mom.upper[j] = v.u;
        mom.lower[j] = v.l;
    }

    const double w = mom.norm();
    if (w < 1e-12) throw std::domain_error("project_energy: empty projection");
    mom.scale(1.0 / std::sqrt(w));
    return {to_representation(mom, state.rep), w};
}

cplx overlap(const SpinorField& a, const SpinorField& b) {
    if (!(a.grid == b.grid) || a.rep != b.rep)
        throw std::invalid_argument("overlap: grid or representation mismatch");
    cplx s{};
    for (std::size_t j = 0; j < a.upper.size(); ++j)
        s += std::conj(a.upper[j]) * b.upper[j] + std::conj(a.lower[j]) * b.lower[j];
    return s * a.measure();
}

SequencePulses negative_energy_pulses() {
    // 0.84 / 0.53 renormalized (their squares sum to 0.9865); kick and
    // phase calibrated against the exact projected state.
    return {-2.0 * std::atan2(0.53, 0.84), -0.037010, 0.031607};
}

SpinorField negative_energy_sequence(const DiracParams& params, const Grid& grid,
                                     double target_p) {
    (void)params;
    const SequencePulses pulses = negative_energy_pulses();

    // sigma_y eigenstate (1, -i)/sqrt(2) in the motional ground state
    SpinorField s = gaussian_spinor({1.0, cplx{0.0, -1.0}}, 0.0, 0.0, 1.0, grid);
    s = displace_momentum(s, target_p, PauliAxis::y);
    s = lightshift_rotation(s, pulses.theta3);
    s = displace_momentum(s, pulses.second_kick, PauliAxis::y);
    s = carrier_rotation(s, M_PI / 2.0, pulses.final_phase);
    return s;
}

}  // namespace diracsim
