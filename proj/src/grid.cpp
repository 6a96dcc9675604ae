#include "diracsim/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diracsim {

std::vector<double> Grid::x_points() const {
    std::vector<double> xs(n_);
    for (int j = 0; j < n_; ++j) xs[j] = x(j);
    return xs;
}

std::vector<double> Grid::p_points() const {
    std::vector<double> ps(n_);
    for (int j = 0; j < n_; ++j) ps[j] = p(j);
    return ps;
}

Grid make_grid(int n_points, std::pair<double, double> x_extent) {
    const auto [x_min, x_max] = x_extent;
    if (n_points < 2 || (n_points & (n_points - 1)) != 0)
        throw std::invalid_argument("make_grid: n_points must be a power of two >= 2, got " +
                                    std::to_string(n_points));
    if (!(x_max > x_min))
        throw std::invalid_argument("make_grid: degenerate extent, x_max must exceed x_min");

    Grid g;
    g.n_ = n_points;
    g.x_min_ = x_min;
    g.x_max_ = x_max;
    g.dx_ = (x_max - x_min) / n_points;
    g.dp_ = 2.0 * M_PI / (x_max - x_min);  // dp*dx*n = 2*pi
    return g;
}

}  // namespace diracsim
