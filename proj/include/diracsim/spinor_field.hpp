#pragma once

#include <vector>

#include "diracsim/grid.hpp"
#include "diracsim/pauli.hpp"

namespace diracsim {

enum class Rep { position, momentum };

/// Two-component wavefunction on a grid, in either representation.
/// upper/lower map to the internal levels |0> and |1>.
struct SpinorField {
    Grid grid;
    Rep rep = Rep::position;
    std::vector<cplx> upper, lower;

    /// Riemann-sum norm, sum(|u|^2 + |l|^2) * d(x or p).
    double norm() const;
    /// Measure of the current representation (dx or dp).
    double measure() const { return rep == Rep::position ? grid.dx() : grid.dp(); }

    void scale(double s);
};

SpinorField make_field(const Grid& grid, Rep rep);

/// Throws if the norm deviates from 1 by more than tol.
void require_normalized(const SpinorField& s, double tol = 1e-6);

}  // namespace diracsim
