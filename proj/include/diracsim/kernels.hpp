#pragma once

#include <span>
#include <vector>

#include "diracsim/pauli.hpp"

namespace diracsim::kernels {

// Data-parallel inner loops of the simulator.  Every kernel exists in a
// serial reference version and an OpenMP version; the unsuffixed entry
// points dispatch on the global execution mode.  The serial versions are
// kept as the ground truth for the equivalence tests and the benchmark.

enum class Exec { serial, parallel };

/// Global execution mode (defaults to parallel when built with OpenMP).
Exec exec_mode();
void set_exec_mode(Exec mode);

// --- per-momentum-mode Dirac propagation -------------------------------
// Applies exp(-i H(p) t) with H(p) = c*p*sigma_x + Omega*sigma_z to the
// spinor at every momentum grid point, using the closed form
// cos(E t) I - i sin(E t) H/E, E = sqrt(c^2 p^2 + Omega^2).
// The E = 0 mode (massless, p = 0) maps to the identity.
void evolve_modes_serial(std::span<cplx> upper, std::span<cplx> lower,
                         std::span<const double> p, double c, double Omega, double t);
void evolve_modes_parallel(std::span<cplx> upper, std::span<cplx> lower,
                           std::span<const double> p, double c, double Omega, double t);
void evolve_modes(std::span<cplx> upper, std::span<cplx> lower,
                  std::span<const double> p, double c, double Omega, double t);

// --- Heisenberg-picture position quadrature ----------------------------
// Per-mode expectation of the drift + oscillation part of x(t) - x(0):
//   M(p,t) = c^2 p H^-1 t + i (exp(2iHt) - 1) xi,
//   xi = (c/2) (sigma_x - c p H^-1) H^-1.
// Written with the exponential factor on the left; this order makes the
// operator Hermitian and reproduces dx/dt = c*sigma_x at t = 0.
// Returns sum_j psi_j^dag M(p_j,t) psi_j * dp.  Requires E(p) > 0 at
// every contributing mode.
double heisenberg_terms_serial(std::span<const cplx> upper, std::span<const cplx> lower,
                               std::span<const double> p, double c, double Omega,
                               double t, double dp);
double heisenberg_terms_parallel(std::span<const cplx> upper, std::span<const cplx> lower,
                                 std::span<const double> p, double c, double Omega,
                                 double t, double dp);
double heisenberg_terms(std::span<const cplx> upper, std::span<const cplx> lower,
                        std::span<const double> p, double c, double Omega,
                        double t, double dp);

// --- characteristic-function sums --------------------------------------
// cos_out[m] = sum_j rho[j] cos(k[m] x[j]) * dx, likewise sin_out.
void char_function_serial(std::span<const double> rho, std::span<const double> xs,
                          double dx, std::span<const double> ks,
                          std::span<double> cos_out, std::span<double> sin_out);
void char_function_parallel(std::span<const double> rho, std::span<const double> xs,
                            double dx, std::span<const double> ks,
                            std::span<double> cos_out, std::span<double> sin_out);
void char_function(std::span<const double> rho, std::span<const double> xs,
                   double dx, std::span<const double> ks,
                   std::span<double> cos_out, std::span<double> sin_out);

// --- Fourier inversion of a characteristic function --------------------
// rho_out[j] = Re( sum_m F[m] exp(-i k[m] x[j]) ) * dk / (2*pi)
void fourier_inversion_serial(std::span<const cplx> F, std::span<const double> ks,
                              double dk, std::span<const double> xs,
                              std::span<double> rho_out);
void fourier_inversion_parallel(std::span<const cplx> F, std::span<const double> ks,
                                double dk, std::span<const double> xs,
                                std::span<double> rho_out);
void fourier_inversion(std::span<const cplx> F, std::span<const double> ks,
                       double dk, std::span<const double> xs,
                       std::span<double> rho_out);

// --- harmonic-oscillator eigenfunction expansion ------------------------
// Accumulates |sum_n cu[n] phi_n(x)|^2 + |sum_n cl[n] phi_n(x)|^2 on the
// x grid, with phi_n the oscillator eigenfunctions of the x = a + a^dag
// convention (ground-state variance 1).  Uses the stable normalized
// upward recurrence.
void hermite_density_serial(std::span<const cplx> cu, std::span<const cplx> cl,
                            std::span<const double> xs, std::span<double> rho_out);
void hermite_density_parallel(std::span<const cplx> cu, std::span<const cplx> cl,
                              std::span<const double> xs, std::span<double> rho_out);
void hermite_density(std::span<const cplx> cu, std::span<const cplx> cl,
                     std::span<const double> xs, std::span<double> rho_out);

}  // namespace diracsim::kernels
