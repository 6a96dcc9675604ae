#pragma once

namespace diracsim {

// Simulation units throughout: lengths in Delta (the trap ground-state
// width), hbar = 1, time in microseconds, momenta in hbar/Delta, angular
// frequencies in rad/us.  Position and momentum quadratures follow the
// canonical convention x = a + a^dag, p = i(a^dag - a)/2, [x, p] = +i.

/// Dirac-equation parameters together with the lab quantities they
/// derive from.
struct DiracParams {
    double c = 0.0;            ///< simulated speed of light [Delta/us], c = 2*eta*omega_tilde
    double mass_term = 0.0;    ///< Omega [rad/us]; m c^2 = hbar*Omega
    double eta = 0.0;          ///< Lamb-Dicke parameter
    double omega_tilde = 0.0;  ///< bichromatic Rabi frequency [rad/us]
    double omega_probe = 0.0;  ///< probe Rabi frequency [rad/us]
};

/// Lab defaults: eta = 0.06, omega_tilde = 2*pi*0.068 rad/us,
/// omega_probe = 2*pi*0.013 rad/us.
DiracParams default_params(double mass_term);

/// Maps lab quantities to simulation parameters (c = 2*eta*omega_tilde).
/// Rejects non-positive eta/omega_tilde and negative Omega.
DiracParams params_from_lab(double eta, double omega_tilde, double Omega, double omega_probe);

/// Compton wavelength c/Omega [Delta]; throws for a massless particle.
double compton_wavelength(const DiracParams& params);

/// Same lab inputs with the mass term chosen so that the Compton
/// wavelength equals lambda_c.
DiracParams params_from_compton(double eta, double omega_tilde, double lambda_c,
                                double omega_probe);

}  // namespace diracsim
