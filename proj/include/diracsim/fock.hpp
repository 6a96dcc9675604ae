#pragma once

#include <Eigen/Dense>
#include <vector>

#include "diracsim/params.hpp"
#include "diracsim/propagator.hpp"
#include "diracsim/spinor_field.hpp"

namespace diracsim {

// Second, independent engine: the laboratory Hamiltonian
// H = c sigma_x p + Omega sigma_z in a truncated harmonic-oscillator
// basis, p = i(a^dag - a)/2, x = a + a^dag.

/// State in the truncated internal (x) Fock basis; amplitude index is
/// s * n_trunc + n with s in {0 = upper, 1 = lower}.
struct FockState {
    int n_trunc = 0;
    Eigen::VectorXcd amplitudes;
    bool truncation_flagged = false;  ///< set when an evolution leaked past the tail bound
};

struct TruncationReport {
    bool healthy = false;
    double tail_mass = 0.0;  ///< population of the top 10 levels
};

/// Tail population over the top 10 oscillator levels; healthy below
/// 1e-8, a hard truncation failure above 1e-6.
TruncationReport truncation_check(const FockState& state);

struct IonHamiltonian {
    int n_trunc = 0;
    DiracParams params;
    Eigen::MatrixXcd matrix;        ///< 2 n_trunc x 2 n_trunc, Hermitian
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;  ///< columns; reused for every evolution time
};

/// Builds the Hamiltonian matrix and its eigendecomposition (done once
/// per parameter set; the Fock-phase rotation a -> ia maps the matrix to
/// a real symmetric one, which is what actually gets diagonalized).
/// Requires n_trunc >= 16.
IonHamiltonian build_hamiltonian(int n_trunc, const DiracParams& params);

/// Motional part of an initial product state.
struct Motional {
    enum class Kind { ground, coherent };
    Kind kind = Kind::ground;
    cplx alpha{};
    static Motional ground() { return {}; }
    static Motional coherent(cplx alpha) { return {Kind::coherent, alpha}; }
};

/// spinor (normalized internally) tensor the requested motional state.
/// Coherent amplitudes are Poissonian e^{-|a|^2/2} a^n / sqrt(n!);
/// |alpha|^2 > n_trunc/4 is rejected as truncation-unhealthy.
FockState initial_fock_state(Vec2 spinor, const Motional& motional, int n_trunc);

/// exp(-iHt) via the cached eigendecomposition; exact for arbitrary t.
/// Flags the result when the tail population exceeds 1e-6.
FockState evolve_fock(const FockState& state, double t, const IonHamiltonian& h);

struct FockObservables {
    double x = 0.0, p = 0.0, sx = 0.0, sy = 0.0, sz = 0.0;
};

/// <x>, <p> from the ladder structure plus the internal Bloch vector.
FockObservables fock_observables(const FockState& state);

/// |psi(x)|^2 on an arbitrary x grid via the oscillator-eigenfunction
/// expansion of both components.
std::vector<double> fock_density_x(const FockState& state, const std::vector<double>& x_grid);

/// Internal-state rotations (motional content untouched).
FockState fock_carrier_rotation(const FockState& state, double theta, double axis_phi);
FockState fock_lightshift_rotation(const FockState& state, double theta);

/// State-dependent kick exp(-i kappa x sigma_axis) in the Fock basis,
/// applied through the eigendecomposition of x (built once, reused
/// across kicks).
class FockDisplacer {
public:
    explicit FockDisplacer(int n_trunc);
    FockState displace(const FockState& state, double kappa, PauliAxis axis) const;

private:
    int n_trunc_;
    Eigen::VectorXd evals_;
    Eigen::MatrixXd evecs_;
};

/// The negative-energy preparation sequence mirrored in this engine,
/// sharing the calibrated pulse constants with the spectral version.
FockState fock_negative_energy_sequence(const DiracParams& params, int n_trunc,
                                        double target_p = 2.2);

}  // namespace diracsim
