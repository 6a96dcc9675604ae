#include "diracsim/spinor_field.hpp"

#include <cmath>
#include <stdexcept>

namespace diracsim {

double SpinorField::norm() const {
    double s = 0.0;
    for (std::size_t j = 0; j < upper.size(); ++j)
        s += std::norm(upper[j]) + std::norm(lower[j]);
    return s * measure();
}

void SpinorField::scale(double s) {
    for (auto& v : upper) v *= s;
    for (auto& v : lower) v *= s;
}

SpinorField make_field(const Grid& grid, Rep rep) {
    SpinorField f;
    f.grid = grid;
    f.rep = rep;
    f.upper.assign(grid.size(), cplx{});
    f.lower.assign(grid.size(), cplx{});
    return f;
}

void require_normalized(const SpinorField& s, double tol) {
    const double n = s.norm();
    if (std::abs(n - 1.0) > tol)
        throw std::invalid_argument("state is not normalized (norm = " + std::to_string(n) + ")");
}

}  // namespace diracsim
