#include "diracsim/params.hpp"

#include <cmath>
#include <stdexcept>

namespace diracsim {

DiracParams params_from_lab(double eta, double omega_tilde, double Omega, double omega_probe) {
    if (!(eta > 0.0)) throw std::invalid_argument("params_from_lab: eta must be positive");
    if (!(omega_tilde > 0.0))
        throw std::invalid_argument("params_from_lab: omega_tilde must be positive");
    if (Omega < 0.0) throw std::invalid_argument("params_from_lab: Omega must be >= 0");
    if (omega_probe < 0.0)
        throw std::invalid_argument("params_from_lab: omega_probe must be >= 0");

    DiracParams p;
    p.eta = eta;
    p.omega_tilde = omega_tilde;
    p.omega_probe = omega_probe;
    p.c = 2.0 * eta * omega_tilde;
    p.mass_term = Omega;
    return p;
}

DiracParams default_params(double mass_term) {
    return params_from_lab(0.06, 2.0 * M_PI * 0.068, mass_term, 2.0 * M_PI * 0.013);
}

double compton_wavelength(const DiracParams& params) {
    if (!(params.mass_term > 0.0))
        throw std::invalid_argument("compton_wavelength: undefined for a massless particle");
    return params.c / params.mass_term;
}

DiracParams params_from_compton(double eta, double omega_tilde, double lambda_c,
                                double omega_probe) {
    if (!(lambda_c > 0.0))
        throw std::invalid_argument("params_from_compton: lambda_c must be positive");
    const double c = 2.0 * eta * omega_tilde;
    return params_from_lab(eta, omega_tilde, c / lambda_c, omega_probe);
}

}  // namespace diracsim
