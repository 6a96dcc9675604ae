#pragma once

#include <vector>

#include "diracsim/params.hpp"
#include "diracsim/spinor_field.hpp"

namespace diracsim {

enum class PauliAxis { x, y, z };

/// One momentum mode of the free Dirac Hamiltonian
/// H(p) = c*p*sigma_x + Omega*sigma_z, E(p) = sqrt(c^2 p^2 + Omega^2).
struct DiracMode {
    double p = 0.0;
    double energy = 0.0;
    Mat2 h;
};

DiracMode dirac_mode(double p, const DiracParams& params);

/// Unitary representation changes (angular-frequency convention,
/// psi~(p) = dx/sqrt(2*pi) * sum_j psi(x_j) exp(-i p x_j) and inverse).
/// Throw on a representation mismatch.
SpinorField to_momentum(const SpinorField& state);
SpinorField to_position(const SpinorField& state);
SpinorField to_representation(const SpinorField& state, Rep rep);

/// Exact evolution under H_D for time t (negative t evolves backward);
/// works per momentum mode, returns in the caller's representation.
SpinorField evolve(const SpinorField& state, double t, const DiracParams& params);

double expect_x(const SpinorField& state);
double expect_p(const SpinorField& state);
double expect_pauli(const SpinorField& state, PauliAxis axis);
/// <H_D> [rad/us].
double expect_energy(const SpinorField& state, const DiracParams& params);

/// Pointwise |upper|^2 + |lower|^2 in the respective representation.
std::vector<double> density_x(const SpinorField& state);
std::vector<double> density_p(const SpinorField& state);

/// Heisenberg-picture <x(t)> evaluated as a per-mode quadrature of the
/// drift and oscillation terms; the independent oracle for
/// expect_x(evolve(state0, t)).  state0 must be in the momentum
/// representation.  For Omega = 0 the p = 0 grid mode must carry no
/// weight (H_D is not invertible there).
double heisenberg_x(const SpinorField& state0, double t, const DiracParams& params);

/// <x(t)> at each requested time via spectral propagation.
std::vector<double> position_series(const SpinorField& state0, const DiracParams& params,
                                    const std::vector<double>& times);

/// Same curve from the Heisenberg-picture oracle.
std::vector<double> heisenberg_series(const SpinorField& state0, const DiracParams& params,
                                      const std::vector<double>& times);

}  // namespace diracsim
