#pragma once

#include "diracsim/params.hpp"
#include "diracsim/propagator.hpp"
#include "diracsim/spinor_field.hpp"

namespace diracsim {

enum class EnergySign { plus, minus };

/// Normalized Gaussian packet exp(-(x-x0)^2/(4 width^2)) exp(i p0 x)
/// times the normalized spinor; <x> = x0, <p> = p0, position variance
/// width^2.  Throws if the packet does not fit the grid.
SpinorField gaussian_spinor(Vec2 spinor, double x0, double p0, double width, const Grid& grid);

/// Carrier pulse exp(-i (theta/2)(cos(phi) sigma_x + sin(phi) sigma_y)),
/// internal state only.
SpinorField carrier_rotation(const SpinorField& state, double theta, double axis_phi);

/// Light-shift pulse exp(-i (theta/2) sigma_z) (far-detuned beam).
SpinorField lightshift_rotation(const SpinorField& state, double theta);

/// State-dependent momentum kick exp(-i kappa x sigma_axis), axis in
/// {x, y}.  A sigma_axis eigenstate with eigenvalue s is shifted by
/// -s*kappa in momentum; kappa = eta*omega_tilde*t_pulse maps a pulse
/// duration to the kick.  Throws if the kicked momentum support reaches
/// the grid edge.
SpinorField displace_momentum(const SpinorField& state, double kappa, PauliAxis axis);

/// P+-/P- at one momentum: (I +- H(p)/E(p)) / 2.  Throws at E = 0.
Mat2 energy_projector(EnergySign sign, double p, const DiracParams& params);

struct ProjectionResult {
    SpinorField state;   ///< renormalized projected state, caller's representation
    double weight = 0.0; ///< pre-normalization ||P psi||^2
};

/// Mode-wise energy projection in momentum space.
/// Throws when the projected weight is below 1e-12.
ProjectionResult project_energy(const SpinorField& state, EnergySign sign,
                                const DiracParams& params);

/// Inner product sum(conj(a) * b) * d(x or p) over both components.
/// Grids and representations must match.
cplx overlap(const SpinorField& a, const SpinorField& b);

/// Pulse constants of the negative-energy sequence, shared by the
/// spectral and Fock-basis implementations.  The counter-kick and final
/// pulse phase are calibration constants chosen to maximize the overlap
/// with the exact projected state at the default parameters
/// (lambda_C = 1.2 Delta, target momentum 2.2).
struct SequencePulses {
    double theta3;       ///< light-shift angle producing the 0.84/0.53 split
    double second_kick;  ///< counter-kick kappa [hbar/Delta]
    double final_phase;  ///< axis phase of the closing pi/2 pulse
};
SequencePulses negative_energy_pulses();

/// Pulse sequence approximating a pure negative-energy wavepacket with
/// mean momentum target_p: prepare a sigma_y eigenstate in the motional
/// ground state, kick it to target_p, rotate the internal state to the
/// 0.84/0.53 superposition, apply a small counter-kick, and close with a
/// pi/2 pulse.
SpinorField negative_energy_sequence(const DiracParams& params, const Grid& grid,
                                     double target_p = 2.2);

}  // namespace diracsim
