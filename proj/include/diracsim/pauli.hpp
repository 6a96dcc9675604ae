#pragma once

#include <complex>

namespace diracsim {

using cplx = std::complex<double>;

/// Two-component internal-state amplitude (upper = |0>, lower = |1>).
struct Vec2 {
    cplx u{}, l{};
};

/// Dense complex 2x2 matrix, row-major [[a, b], [c, d]].
/// Small value type for per-momentum-mode spinor algebra.
struct Mat2 {
    cplx a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
    static Mat2 pauli_y() { return {0.0, {0.0, -1.0}, {0.0, 1.0}, 0.0}; }
    static Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    friend Mat2 operator*(cplx s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

    Mat2 adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    Vec2 apply(const Vec2& v) const { return {a * v.u + b * v.l, c * v.u + d * v.l}; }

    /// <v| M |v>
    cplx expectation(const Vec2& v) const {
        const Vec2 mv = apply(v);
        return std::conj(v.u) * mv.u + std::conj(v.l) * mv.l;
    }

    double frobenius_norm() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
};

/// exp(-i (theta/2) n.sigma) for a unit axis n; closed form via
/// cos(theta/2) I - i sin(theta/2) n.sigma.
inline Mat2 axis_rotation(double theta, double nx, double ny, double nz) {
    const double ch = std::cos(0.5 * theta);
    const double sh = std::sin(0.5 * theta);
    const cplx i{0.0, 1.0};
    return {ch - i * sh * nz,       -i * sh * (nx - i * ny),
            -i * sh * (nx + i * ny), ch + i * sh * nz};
}

}  // namespace diracsim
