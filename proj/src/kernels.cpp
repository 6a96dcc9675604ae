#include "diracsim/kernels.hpp"

#include <cmath>

namespace diracsim::kernels {

namespace {

#ifdef _OPENMP
Exec g_mode = Exec::parallel;
#else
Exec g_mode = Exec::serial;
#endif

// Shared per-mode body of the propagation kernel.
inline void evolve_one_mode(cplx& u, cplx& l, double p, double c, double Omega, double t) {
    const double cp = c * p;
    const double E = std::hypot(cp, Omega);
    if (E == 0.0) return;  // exp(-iHt) = I at the singular mode
    const double ct = std::cos(E * t);
    const double st = std::sin(E * t) / E;
    const cplx i{0.0, 1.0};
    const cplx uu = (ct - i * st * Omega) * u - i * st * cp * l;
    const cplx ll = (ct + i * st * Omega) * l - i * st * cp * u;
    u = uu;
    l = ll;
}

// Drift + oscillation expectation value at one momentum mode.  All
// coefficients are real; the combined operator is
//   (c^3 p^2 t / E^2 + (c Om / 2E^2)(sin 2Et / E) Om) sigma_x
//   + (c Om / 2E^2)(cos 2Et - 1)                       sigma_y
//   + (c^2 p Om t / E^2 - (c Om / 2E^2)(sin 2Et / E) c p) sigma_z
inline double heisenberg_one_mode(const cplx& u, const cplx& l, double p, double c,
                                  double Omega, double t) {
    const double cp = c * p;
    const double E2 = cp * cp + Omega * Omega;
    if (E2 == 0.0) return 0.0;  // caller guarantees no weight here
    const double E = std::sqrt(E2);
    const double s2 = std::sin(2.0 * E * t);
    const double c2 = std::cos(2.0 * E * t);
    const double xi = 0.5 * c * Omega / E2;

    const double mx = c * cp * p * t / E2 + xi * s2 * Omega / E;
    const double my = xi * (c2 - 1.0);
    const double mz = c * p * Omega * t / E2 - xi * s2 * cp / E;

    const cplx ul = std::conj(u) * l;
    const double pop = std::norm(u) - std::norm(l);
    return mx * 2.0 * ul.real() + my * 2.0 * ul.imag() + mz * pop;
}

inline void char_function_one_k(std::span<const double> rho, std::span<const double> xs,
                                double dx, double k, double& cs, double& sn) {
    double sc = 0.0, ss = 0.0;
    for (std::size_t j = 0; j < rho.size(); ++j) {
        sc += rho[j] * std::cos(k * xs[j]);
        ss += rho[j] * std::sin(k * xs[j]);
    }
    cs = sc * dx;
    sn = ss * dx;
}

inline double inversion_one_x(std::span<const cplx> F, std::span<const double> ks,
                              double dk, double x) {
    double s = 0.0;
    for (std::size_t m = 0; m < F.size(); ++m) {
        const double a = ks[m] * x;
        s += F[m].real() * std::cos(a) + F[m].imag() * std::sin(a);
    }
    return s * dk / (2.0 * M_PI);
}

inline double hermite_one_x(std::span<const cplx> cu, std::span<const cplx> cl, double x) {
    // phi_n for the x = a + a^dag convention: phi_n(x) = 2^{-1/4} h_n(x/sqrt2)
    // with h_n the unit-normalized oscillator eigenfunctions.
    const double u = x / std::sqrt(2.0);
    const double scale = std::pow(2.0, -0.25);
    double hm1 = 0.0;
    double h = std::pow(M_PI, -0.25) * std::exp(-0.5 * u * u);
    cplx su = cu[0] * h, sl = cl[0] * h;
    for (std::size_t n = 1; n < cu.size(); ++n) {
        const double hn = std::sqrt(2.0 / n) * u * h - std::sqrt((n - 1.0) / n) * hm1;
        hm1 = h;
        h = hn;
        su += cu[n] * h;
        sl += cl[n] * h;
    }
    su *= scale;
    sl *= scale;
    return std::norm(su) + std::norm(sl);
}

}  // namespace

Exec exec_mode() { return g_mode; }
void set_exec_mode(Exec mode) { g_mode = mode; }

void evolve_modes_serial(std::span<cplx> upper, std::span<cplx> lower,
                         std::span<const double> p, double c, double Omega, double t) {
    for (std::size_t j = 0; j < p.size(); ++j)
        evolve_one_mode(upper[j], lower[j], p[j], c, Omega, t);
}

void evolve_modes_parallel(std::span<cplx> upper, std::span<cplx> lower,
                           std::span<const double> p, double c, double Omega, double t) {
    const long n = static_cast<long>(p.size());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < n; ++j)
        evolve_one_mode(upper[j], lower[j], p[j], c, Omega, t);
}

void evolve_modes(std::span<cplx> upper, std::span<cplx> lower,
                  std::span<const double> p, double c, double Omega, double t) {
    if (g_mode == Exec::parallel)
        evolve_modes_parallel(upper, lower, p, c, Omega, t);
    else
        evolve_modes_serial(upper, lower, p, c, Omega, t);
}

double heisenberg_terms_serial(std::span<const cplx> upper, std::span<const cplx> lower,
                               std::span<const double> p, double c, double Omega,
                               double t, double dp) {
    double s = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j)
        s += heisenberg_one_mode(upper[j], lower[j], p[j], c, Omega, t);
    return s * dp;
}

double heisenberg_terms_parallel(std::span<const cplx> upper, std::span<const cplx> lower,
                                 std::span<const double> p, double c, double Omega,
                                 double t, double dp) {
    const long n = static_cast<long>(p.size());
    double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
    for (long j = 0; j < n; ++j)
        s += heisenberg_one_mode(upper[j], lower[j], p[j], c, Omega, t);
    return s * dp;
}

double heisenberg_terms(std::span<const cplx> upper, std::span<const cplx> lower,
                        std::span<const double> p, double c, double Omega,
                        double t, double dp) {
    return g_mode == Exec::parallel
               ? heisenberg_terms_parallel(upper, lower, p, c, Omega, t, dp)
               : heisenberg_terms_serial(upper, lower, p, c, Omega, t, dp);
}

void char_function_serial(std::span<const double> rho, std::span<const double> xs,
                          double dx, std::span<const double> ks,
                          std::span<double> cos_out, std::span<double> sin_out) {
    for (std::size_t m = 0; m < ks.size(); ++m)
        char_function_one_k(rho, xs, dx, ks[m], cos_out[m], sin_out[m]);
}

void char_function_parallel(std::span<const double> rho, std::span<const double> xs,
                            double dx, std::span<const double> ks,
                            std::span<double> cos_out, std::span<double> sin_out) {
    const long nk = static_cast<long>(ks.size());
#pragma omp parallel for schedule(static)
    for (long m = 0; m < nk; ++m)
        char_function_one_k(rho, xs, dx, ks[m], cos_out[m], sin_out[m]);
}

void char_function(std::span<const double> rho, std::span<const double> xs,
                   double dx, std::span<const double> ks,
                   std::span<double> cos_out, std::span<double> sin_out) {
    if (g_mode == Exec::parallel)
        char_function_parallel(rho, xs, dx, ks, cos_out, sin_out);
    else
        char_function_serial(rho, xs, dx, ks, cos_out, sin_out);
}

void fourier_inversion_serial(std::span<const cplx> F, std::span<const double> ks,
                              double dk, std::span<const double> xs,
                              std::span<double> rho_out) {
    for (std::size_t j = 0; j < xs.size(); ++j)
        rho_out[j] = inversion_one_x(F, ks, dk, xs[j]);
}

void fourier_inversion_parallel(std::span<const cplx> F, std::span<const double> ks,
                                double dk, std::span<const double> xs,
                                std::span<double> rho_out) {
    const long nx = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < nx; ++j)
        rho_out[j] = inversion_one_x(F, ks, dk, xs[j]);
}

void fourier_inversion(std::span<const cplx> F, std::span<const double> ks,
                       double dk, std::span<const double> xs,
                       std::span<double> rho_out) {
    if (g_mode == Exec::parallel)
        fourier_inversion_parallel(F, ks, dk, xs, rho_out);
    else
        fourier_inversion_serial(F, ks, dk, xs, rho_out);
}

void hermite_density_serial(std::span<const cplx> cu, std::span<const cplx> cl,
                            std::span<const double> xs, std::span<double> rho_out) {
    for (std::size_t j = 0; j < xs.size(); ++j)
        rho_out[j] = hermite_one_x(cu, cl, xs[j]);
}

void hermite_density_parallel(std::span<const cplx> cu, std::span<const cplx> cl,
                              std::span<const double> xs, std::span<double> rho_out) {
    const long nx = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < nx; ++j)
        rho_out[j] = hermite_one_x(cu, cl, xs[j]);
}

void hermite_density(std::span<const cplx> cu, std::span<const cplx> cl,
                     std::span<const double> xs, std::span<double> rho_out) {
    if (g_mode == Exec::parallel)
        hermite_density_parallel(cu, cl, xs, rho_out);
    else
        hermite_density_serial(cu, cl, xs, rho_out);
}

}  // namespace diracsim::kernels
