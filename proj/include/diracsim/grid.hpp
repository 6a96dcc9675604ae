#pragma once

#include <utility>
#include <vector>

namespace diracsim {

/// Uniform position grid with its conjugate momentum grid.
///
/// Units: lengths in Delta (ground-state width), momenta in hbar/Delta.
/// x_j = x_min + j*dx, j = 0..n-1.  The momentum grid uses the standard
/// wrapped discrete-Fourier ordering, p_j = j*dp for j < n/2 and
/// (j-n)*dp otherwise, with dp*dx*n = 2*pi.
class Grid {
public:
    Grid() = default;

    int size() const { return n_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double dx() const { return dx_; }
    double dp() const { return dp_; }
    double x(int j) const { return x_min_ + j * dx_; }
    double p(int j) const { return (j < n_ / 2 ? j : j - n_) * dp_; }
    /// Largest representable |p| (Nyquist momentum).
    double p_nyquist() const { return (n_ / 2) * dp_; }

    std::vector<double> x_points() const;
    std::vector<double> p_points() const;

    bool operator==(const Grid& o) const {
        return n_ == o.n_ && x_min_ == o.x_min_ && x_max_ == o.x_max_;
    }

    friend Grid make_grid(int n_points, std::pair<double, double> x_extent);

private:
    int n_ = 0;
    double x_min_ = 0.0, x_max_ = 0.0, dx_ = 0.0, dp_ = 0.0;
};

/// Builds a grid with n_points a power of two (>= 2) over [x_min, x_max).
/// Throws std::invalid_argument for non-power-of-two sizes or a
/// degenerate extent.
Grid make_grid(int n_points, std::pair<double, double> x_extent);

}  // namespace diracsim
