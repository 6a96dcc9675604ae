#include "diracsim/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "diracsim/kernels.hpp"
#include "diracsim/state_prep.hpp"

namespace diracsim {

namespace {

constexpr double kTailHealthy = 1e-8;
constexpr double kTailLeak = 1e-6;

void require_fock_norm(const FockState& s) {
    const double n = s.amplitudes.squaredNorm();
    if (std::abs(n - 1.0) > 1e-6)
        throw std::invalid_argument("fock state is not normalized (norm^2 = " +
                                    std::to_string(n) + ")");
}

// 2x2 internal rotation applied level by level.
FockState apply_internal(const FockState& s, const Mat2& m) {
    FockState out = s;
    const int N = s.n_trunc;
    for (int n = 0; n < N; ++n) {
        const Vec2 v = m.apply({s.amplitudes[n], s.amplitudes[N + n]});
        out.amplitudes[n] = v.u;
        out.amplitudes[N + n] = v.l;
    }
    return out;
}

}  // namespace

TruncationReport truncation_check(const FockState& state) {
    const int N = state.n_trunc;
    const int lo = std::max(0, N - 10);
    double tail = 0.0;
    for (int n = lo; n < N; ++n)
        tail += std::norm(state.amplitudes[n]) + std::norm(state.amplitudes[N + n]);
    return {tail < kTailHealthy, tail};
}

IonHamiltonian build_hamiltonian(int n_trunc, const DiracParams& params) {
    if (n_trunc < 16) throw std::invalid_argument("build_hamiltonian: n_trunc must be >= 16");
    const int N = n_trunc;
    const int M = 2 * N;

    IonHamiltonian h;
    h.n_trunc = N;
    h.params = params;
    h.matrix = Eigen::MatrixXcd::Zero(M, M);

    // H = c sigma_x (x) p + Omega sigma_z (x) I,  p_{n+1,n} = i sqrt(n+1)/2
    const cplx i{0.0, 1.0};
    for (int n = 0; n < N; ++n) {
        h.matrix(n, n) = params.mass_term;
        h.matrix(N + n, N + n) = -params.mass_term;
        if (n + 1 < N) {
            const cplx up = i * 0.5 * std::sqrt(n + 1.0) * params.c;  // <n+1| c*p |n>
            // sigma_x couples the internal blocks
            h.matrix(n + 1, N + n) = up;
            h.matrix(N + n, n + 1) = std::conj(up);
            h.matrix(N + n + 1, n) = up;
            h.matrix(n, N + n + 1) = std::conj(up);
        }
    }

    // The phase rotation a -> ia (D = diag(i^n) per block) maps p to
    // (a + a^dag)/2, so D^dag H D is real symmetric; diagonalize there
    // and rotate the eigenvectors back.
    Eigen::MatrixXd hr = Eigen::MatrixXd::Zero(M, M);
    for (int n = 0; n < N; ++n) {
        hr(n, n) = params.mass_term;
        hr(N + n, N + n) = -params.mass_term;
        if (n + 1 < N) {
            const double up = 0.5 * std::sqrt(n + 1.0) * params.c;
            hr(n + 1, N + n) = up;
            hr(N + n, n + 1) = up;
            hr(N + n + 1, n) = up;
            hr(n, N + n + 1) = up;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hr);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("build_hamiltonian: eigendecomposition failed");
    h.eigenvalues = solver.eigenvalues();

    Eigen::VectorXcd phases(M);
    for (int n = 0; n < N; ++n) {
        const cplx ph = std::pow(cplx{0.0, 1.0}, n % 4);
        phases[n] = ph;
        phases[N + n] = ph;
    }
    h.eigenvectors = phases.asDiagonal() * solver.eigenvectors().cast<cplx>();
    return h;
}

FockState initial_fock_state(Vec2 spinor, const Motional& motional, int n_trunc) {
    const double sn = std::sqrt(std::norm(spinor.u) + std::norm(spinor.l));
    if (!(sn > 0.0)) throw std::invalid_argument("initial_fock_state: zero spinor");
    spinor.u /= sn;
    spinor.l /= sn;

    Eigen::VectorXcd motion = Eigen::VectorXcd::Zero(n_trunc);
    if (motional.kind == Motional::Kind::ground) {
        motion[0] = 1.0;
    } else {
        const double a2 = std::norm(motional.alpha);
        if (a2 > n_trunc / 4.0)
            throw std::invalid_argument(
                "initial_fock_state: |alpha|^2 too large for this truncation");
        motion[0] = std::exp(-0.5 * a2);
        for (int n = 1; n < n_trunc; ++n)
            motion[n] = motion[n - 1] * motional.alpha / std::sqrt(double(n));
    }

    FockState s;
    s.n_trunc = n_trunc;
    s.amplitudes.resize(2 * n_trunc);
    s.amplitudes.head(n_trunc) = spinor.u * motion;
    s.amplitudes.tail(n_trunc) = spinor.l * motion;
    return s;
}

FockState evolve_fock(const FockState& state, double t, const IonHamiltonian& h) {
    if (state.n_trunc != h.n_trunc)
        throw std::invalid_argument("evolve_fock: truncation mismatch");
    require_fock_norm(state);

    FockState out = state;
    Eigen::VectorXcd c = h.eigenvectors.adjoint() * state.amplitudes;
    for (int k = 0; k < c.size(); ++k) c[k] *= std::polar(1.0, -h.eigenvalues[k] * t);
    out.amplitudes = h.eigenvectors * c;

    const TruncationReport rep = truncation_check(out);
    if (rep.tail_mass > kTailLeak) out.truncation_flagged = true;
    return out;
}

FockObservables fock_observables(const FockState& state) {
    require_fock_norm(state);
    const int N = state.n_trunc;
    const auto& a = state.amplitudes;

    FockObservables obs;
    for (int s = 0; s < 2; ++s) {
        const int off = s * N;
        for (int n = 0; n + 1 < N; ++n) {
            const cplx z = std::conj(a[off + n + 1]) * a[off + n];
            const double r = std::sqrt(n + 1.0);
            obs.x += 2.0 * r * z.real();  // x = a + a^dag
            obs.p -= r * z.imag();        // p = i(a^dag - a)/2
        }
    }
    cplx ul{};
    for (int n = 0; n < N; ++n) {
        ul += std::conj(a[n]) * a[N + n];
        obs.sz += std::norm(a[n]) - std::norm(a[N + n]);
    }
    obs.sx = 2.0 * ul.real();
    obs.sy = 2.0 * ul.imag();
    return obs;
}

std::vector<double> fock_density_x(const FockState& state, const std::vector<double>& x_grid) {
    require_fock_norm(state);
    const int N = state.n_trunc;
    std::vector<cplx> cu(N), cl(N);
    for (int n = 0; n < N; ++n) {
        cu[n] = state.amplitudes[n];
        cl[n] = state.amplitudes[N + n];
    }
    std::vector<double> rho(x_grid.size());
    kernels::hermite_density(cu, cl, x_grid, rho);
    return rho;
}

FockState fock_carrier_rotation(const FockState& state, double theta, double axis_phi) {
    require_fock_norm(state);
    return apply_internal(state,
                          axis_rotation(theta, std::cos(axis_phi), std::sin(axis_phi), 0.0));
}

FockState fock_lightshift_rotation(const FockState& state, double theta) {
    require_fock_norm(state);
    return apply_internal(state, axis_rotation(theta, 0.0, 0.0, 1.0));
}

FockDisplacer::FockDisplacer(int n_trunc) : n_trunc_(n_trunc) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n_trunc, n_trunc);
    for (int n = 0; n + 1 < n_trunc; ++n) {
        x(n + 1, n) = std::sqrt(n + 1.0);
        x(n, n + 1) = x(n + 1, n);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x);
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
}

FockState FockDisplacer::displace(const FockState& state, double kappa, PauliAxis axis) const {
    if (state.n_trunc != n_trunc_)
        throw std::invalid_argument("FockDisplacer: truncation mismatch");
    if (axis == PauliAxis::z)
        throw std::invalid_argument("FockDisplacer: axis must be x or y");
    require_fock_norm(state);

    const int N = n_trunc_;
    const cplx i{0.0, 1.0};
    const Eigen::VectorXcd u = state.amplitudes.head(N);
    const Eigen::VectorXcd l = state.amplitudes.tail(N);

    // branch amplitudes along the +-1 eigenvectors of sigma_axis
    Eigen::VectorXcd bp, bm;
    if (axis == PauliAxis::x) {
        bp = (u + l) / std::sqrt(2.0);
        bm = (u - l) / std::sqrt(2.0);
    } else {
        bp = (u - i * l) / std::sqrt(2.0);
        bm = (u + i * l) / std::sqrt(2.0);
    }

    auto phase_kick = [&](const Eigen::VectorXcd& v, double kap) {
        Eigen::VectorXcd c = evecs_.transpose() * v;
        for (int k = 0; k < N; ++k) c[k] *= std::polar(1.0, -kap * evals_[k]);
        return Eigen::VectorXcd(evecs_ * c);
    };
    bp = phase_kick(bp, kappa);   // sigma = +1 branch: exp(-i kappa x)
    bm = phase_kick(bm, -kappa);  // sigma = -1 branch: exp(+i kappa x)

    FockState out = state;
    if (axis == PauliAxis::x) {
        out.amplitudes.head(N) = (bp + bm) / std::sqrt(2.0);
        out.amplitudes.tail(N) = (bp - bm) / std::sqrt(2.0);
    } else {
        out.amplitudes.head(N) = (bp + bm) / std::sqrt(2.0);
        out.amplitudes.tail(N) = i * (bp - bm) / std::sqrt(2.0);
    }
    return out;
}

FockState fock_negative_energy_sequence(const DiracParams& params, int n_trunc,
                                        double target_p) {
    (void)params;
    const SequencePulses pulses = negative_energy_pulses();
    const FockDisplacer disp(n_trunc);

    FockState s = initial_fock_state({1.0, cplx{0.0, -1.0}}, Motional::ground(), n_trunc);
    s = disp.displace(s, target_p, PauliAxis::y);
    s = fock_lightshift_rotation(s, pulses.theta3);
    s = disp.displace(s, pulses.second_kick, PauliAxis::y);
    s = fock_carrier_rotation(s, M_PI / 2.0, pulses.final_phase);
    return s;
}

}  // namespace diracsim
